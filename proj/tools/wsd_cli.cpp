/*
  Command-line front end. Every capability of the library is reachable from
  here with deterministic, parseable output; all randomness flows through
  the explicit --seed flag and --format json mirrors each report as a
  structured document with the same field names.

  Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
  3 capacity or oracle-incomplete.
*/

#include "wsd/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using json = nlohmann::json;
using namespace wsd;

namespace {

struct GlobalOptions {
    std::string format = "text";
    std::uint64_t seed = 0;
    std::string epsilon;
};

std::optional<Rational> epsilonValue(const GlobalOptions& g) {
    if (g.epsilon.empty()) return std::nullopt;
    return parseRational(g.epsilon);
}

std::vector<int> parseIntList(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
        pos = comma == std::string::npos ? text.size() + 1 : comma + 1;
        if (token.empty()) throw std::invalid_argument("empty integer token");
        out.push_back(std::stoi(token));
    }
    return out;
}

json subsetJson(unsigned mask, int n) {
    json out = json::array();
    for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) out.push_back(i + 1);
    return out;
}

json weightsJson(const WeightData& w) {
    json out = json::array();
    for (const Rational& a : w.weights) out.push_back(toString(a));
    return out;
}

void emit(const GlobalOptions& g, const json& structured, const std::string& text) {
    if (g.format == "json")
        std::cout << structured.dump(2) << "\n";
    else
        std::cout << text;
}

TargetModel loadTargetOrPoint(const std::string& path) {
    if (path.empty()) return pointTarget();
    return loadTargetFile(path);
}

std::vector<int> classListOrUnits(const std::string& classes, int n) {
    if (classes.empty()) return std::vector<int>(n, kUnitClassId);
    std::vector<int> ids = parseIntList(classes);
    if (static_cast<int>(ids.size()) != n)
        throw std::invalid_argument("--classes must list one id per marked point");
    return ids;
}

void requireDomain(const WeightData& w) {
    if (!inDomain(w))
        throw std::invalid_argument("weight data lies outside the domain D_{g,n,beta}");
}

int runSuiteAndReport(const GlobalOptions& g, const SuiteReport& report) {
    json out{{"command", "verify"},
             {"suite", report.suite},
             {"pass", report.pass},
             {"checks", report.checks},
             {"lines", report.lines}};
    if (!report.pass) out["counterexample"] = report.counterexample;
    std::ostringstream text;
    text << (report.pass ? "PASS" : "FAIL") << " suite=" << report.suite
         << " checks=" << report.checks << "\n";
    for (const std::string& line : report.lines) text << "  " << line << "\n";
    if (!report.pass) text << "  counterexample: " << report.counterexample << "\n";
    emit(g, out, text.str());
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact weighted gravitational descendants and Hassett chamber combinatorics"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags are accepted after the subcommand too

    GlobalOptions global;
    app.add_option("--format", global.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", global.seed, "seed for all randomized operations");
    app.add_option("--epsilon", global.epsilon,
                   "rational substituted for 'e' placeholders in weight lists");

    std::string weights, ksText, target, classes, faces, domain, fromText, toText, suite;
    int genus = 0, beta = 0, enumN = 3, maxN = 7, maxGenus = 2, level = 12, count = -1,
        paths = 50, divisorClass = 2;
    bool exponential = false, trace = false, allowZero = false;
    std::string decomposition = "fine";

    CLI::App* cmdComplex = app.add_subcommand("complex", "maximal faces of Delta_A");
    cmdComplex->add_option("--weights", weights)->required();
    cmdComplex->add_option("--genus", genus);
    cmdComplex->add_option("--beta", beta);

    CLI::App* cmdRealize = app.add_subcommand("realize", "weight witness for a complex");
    cmdRealize->add_option("--faces", faces)->required();
    cmdRealize->add_option("--domain", domain, "g,b domain constraint");
    cmdRealize->add_flag("--allow-zero", allowZero, "permit zero weights");

    CLI::App* cmdDescendant = app.add_subcommand("descendant", "weighted descendant invariant");
    cmdDescendant->add_option("--genus", genus)->required();
    cmdDescendant->add_option("--weights", weights)->required();
    cmdDescendant->add_option("--ks", ksText)->required();
    cmdDescendant->add_option("--target", target);
    cmdDescendant->add_option("--classes", classes);
    cmdDescendant->add_flag("--trace", trace);

    CLI::App* cmdGenpoly = app.add_subcommand("genpoly", "generating polynomial");
    cmdGenpoly->add_option("--genus", genus)->required();
    cmdGenpoly->add_option("--weights", weights)->required();
    cmdGenpoly->add_flag("--exponential", exponential);
    cmdGenpoly->add_option("--target", target);
    cmdGenpoly->add_option("--classes", classes);

    CLI::App* cmdKappa = app.add_subcommand("kappa", "kappa class intersection number");
    cmdKappa->add_option("--genus", genus)->required();
    cmdKappa->add_option("--ks", ksText)->required();

    CLI::App* cmdUnweighted = app.add_subcommand("unweighted", "point-target descendant");
    cmdUnweighted->add_option("--genus", genus)->required();
    cmdUnweighted->add_option("--ks", ksText)->required();

    CLI::App* cmdPath = app.add_subcommand("path", "simple wall crossing path");
    cmdPath->add_option("--from", fromText)->required();
    cmdPath->add_option("--to", toText)->required();
    cmdPath->add_option("--genus", genus);
    cmdPath->add_option("--beta", beta);

    CLI::App* cmdVerify = app.add_subcommand("verify", "run a verification suite");
    cmdVerify->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"wallcross", "genpoly", "dilaton", "string", "divisor",
                               "oracle"}));
    cmdVerify->add_option("--count", count, "number of random checks");
    cmdVerify->add_option("--paths", paths, "crossing paths composed (wallcross suite)");
    cmdVerify->add_option("--max-n", maxN);
    cmdVerify->add_option("--max-genus", maxGenus);
    cmdVerify->add_option("--level", level, "oracle cap on 3g-3+n");
    cmdVerify->add_option("--target", target, "formal target document (divisor suite)");
    cmdVerify->add_option("--divisor-class", divisorClass);

    CLI::App* cmdChambers = app.add_subcommand("chambers", "enumerate realizable complexes");
    cmdChambers->add_option("--n", enumN)->required();
    cmdChambers->add_option("--decomposition", decomposition)
        ->check(CLI::IsMember({"fine", "coarse"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmdComplex) {
            WeightData w = makeWeightData(parseWeightList(weights, epsilonValue(global)),
                                          genus, beta);
            SimplicialComplex c = buildComplex(w);
            json out{{"command", "complex"},
                     {"n", c.vertexCount()},
                     {"weights", weightsJson(w)},
                     {"inDomain", inDomain(w)},
                     {"complex", formatComplex(c)}};
            json maximal = json::array();
            for (unsigned mask : c.maximalFaces())
                maximal.push_back(subsetJson(mask, c.vertexCount()));
            out["maximalFaces"] = maximal;
            emit(global, out, formatComplex(c) + "\n");
        } else if (*cmdRealize) {
            SimplicialComplex c = parseComplex(faces);
            RealizeOptions options;
            options.positiveOnly = !allowZero;
            if (!domain.empty()) {
                std::vector<int> gb = parseIntList(domain);
                if (gb.size() != 2) throw std::invalid_argument("--domain expects g,b");
                options.domainConstraint = true;
                options.genus = gb[0];
                options.betaDegree = gb[1];
            }
            std::optional<WeightData> witness = realize(c, options);
            json out{{"command", "realize"},
                     {"complex", formatComplex(c)},
                     {"feasible", witness.has_value()}};
            if (witness) {
                out["witness"] = weightsJson(*witness);
                std::ostringstream text;
                for (int i = 0; i < witness->size(); ++i)
                    text << (i ? "," : "") << toString(witness->weights[i]);
                emit(global, out, text.str() + "\n");
            } else {
                emit(global, out, "infeasible\n");
            }
        } else if (*cmdDescendant) {
            TargetModel model = loadTargetOrPoint(target);
            WeightData w = makeWeightData(parseWeightList(weights, epsilonValue(global)),
                                          genus, model.betaDegree);
            requireDomain(w);
            SimplicialComplex c = buildComplex(w);
            WeightedQuery q{genus, c, parseIntList(ksText),
                            classListOrUnits(classes, c.vertexCount()), &model};
            std::vector<PartitionTerm> termTrace;
            Rational value = weightedDescendant(q, trace ? &termTrace : nullptr);
            json out{{"command", "descendant"},
                     {"genus", genus},
                     {"complex", formatComplex(c)},
                     {"value", toString(value)}};
            std::ostringstream text;
            if (trace) {
                json traceJson = json::array();
                for (const PartitionTerm& term : termTrace) {
                    std::ostringstream blocks;
                    for (std::size_t b = 0; b < term.partition.blocks.size(); ++b)
                        blocks << (b ? "|" : "")
                               << formatSubset(term.partition.blocks[b], c.vertexCount());
                    std::ostringstream kline;
                    for (std::size_t b = 0; b < term.kSigma.size(); ++b)
                        kline << (b ? "," : "") << term.kSigma[b];
                    text << "partition " << blocks.str() << " sign=" << term.sign
                         << " kSigma=" << kline.str() << " oracle="
                         << toString(term.oracleValue) << " term=" << toString(term.term)
                         << "\n";
                    traceJson.push_back({{"blocks", blocks.str()},
                                         {"sign", term.sign},
                                         {"kSigma", term.kSigma},
                                         {"oracle", toString(term.oracleValue)},
                                         {"term", toString(term.term)}});
                }
                out["trace"] = traceJson;
            }
            text << "value = " << toString(value) << "\n";
            emit(global, out, text.str());
        } else if (*cmdGenpoly) {
            TargetModel model = loadTargetOrPoint(target);
            WeightData w = makeWeightData(parseWeightList(weights, epsilonValue(global)),
                                          genus, model.betaDegree);
            requireDomain(w);
            SimplicialComplex c = buildComplex(w);
            MultiPoly poly = generatingPolynomial(
                genus, c, model, classListOrUnits(classes, c.vertexCount()), exponential);
            json out{{"command", "genpoly"},
                     {"genus", genus},
                     {"complex", formatComplex(c)},
                     {"exponential", exponential},
                     {"polynomial", poly.toString()}};
            emit(global, out, poly.toString() + "\n");
        } else if (*cmdKappa) {
            Rational value = kappaNumber(genus, parseIntList(ksText));
            json out{{"command", "kappa"}, {"genus", genus}, {"value", toString(value)}};
            emit(global, out, "value = " + toString(value) + "\n");
        } else if (*cmdUnweighted) {
            Rational value = wkPoint(genus, parseIntList(ksText));
            json out{{"command", "unweighted"}, {"genus", genus}, {"value", toString(value)}};
            emit(global, out, "value = " + toString(value) + "\n");
        } else if (*cmdPath) {
            auto eps = epsilonValue(global);
            WeightData from = makeWeightData(parseWeightList(fromText, eps), genus, beta);
            WeightData to = makeWeightData(parseWeightList(toText, eps), genus, beta);
            CrossingPath path = crossingPath(from, to, global.seed);
            json events = json::array();
            std::ostringstream text;
            for (const CrossingEvent& event : path.events) {
                std::ostringstream members;
                bool first = true;
                for (int i = 0; i < from.size(); ++i) {
                    if (!(event.subset & (1u << i))) continue;
                    members << (first ? "" : ",") << (i + 1);
                    first = false;
                }
                text << "t=" << toString(event.parameter) << " add I={" << members.str()
                     << "}\n";
                events.push_back({{"t", toString(event.parameter)},
                                  {"add", event.add},
                                  {"subset", subsetJson(event.subset, from.size())}});
            }
            json out{{"command", "path"},
                     {"from", weightsJson(path.from)},
                     {"to", weightsJson(path.to)},
                     {"events", events}};
            emit(global, out, text.str());
        } else if (*cmdVerify) {
            SuiteReport report;
            if (suite == "wallcross")
                report = suiteWallcross(count < 0 ? 200 : count, paths, global.seed, maxN,
                                        maxGenus);
            else if (suite == "genpoly")
                report = suiteGenpolyWallcross(count < 0 ? 25 : count, global.seed,
                                               std::min(maxN, 6));
            else if (suite == "dilaton")
                report = suiteDilaton(maxGenus, std::min(maxN, 5));
            else if (suite == "string")
                report = suiteString(maxGenus, std::min(maxN, 5));
            else if (suite == "divisor")
                report = target.empty() ? suiteDivisor()
                                        : suiteDivisor(loadTargetFile(target), divisorClass);
            else if (suite == "oracle")
                report = suiteOracle(level, 10);
            return runSuiteAndReport(global, report);
        } else if (*cmdChambers) {
            Decomposition d = decomposition == "fine" ? Decomposition::fine
                                                      : Decomposition::coarse;
            std::vector<SimplicialComplex> complexes = enumerateChamberComplexes(enumN, d);
            json list = json::array();
            std::ostringstream text;
            for (const SimplicialComplex& c : complexes) {
                list.push_back(formatComplex(c));
                text << formatComplex(c) << "\n";
            }
            json out{{"command", "chambers"},
                     {"n", enumN},
                     {"decomposition", decomposition},
                     {"count", complexes.size()},
                     {"complexes", list}};
            emit(global, out, text.str());
        }
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const OracleIncompleteError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
