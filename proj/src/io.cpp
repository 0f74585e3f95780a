#include "fockseq/io.hpp"

#include <cmath>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fockseq/errors.hpp"
#include "fockseq/parallel.hpp"

namespace fockseq {

namespace {

using nlohmann::ordered_json;

std::complex<double> complex_from_json(const ordered_json &j, const std::string &field) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw validation_error(field + ": expected a number or [re, im]");
}

ordered_json complex_to_json(std::complex<double> z) {
    if (z.imag() == 0.0) return z.real();
    return ordered_json::array({z.real(), z.imag()});
}

double number_field(const ordered_json &j, const std::string &key,
                    const std::string &ctx) {
    if (!j.contains(key) || !j[key].is_number())
        throw validation_error(ctx + "." + key + ": expected a number");
    return j[key].get<double>();
}

SymbolSpec symbol_from_json(const ordered_json &j);

SymbolSpec parse_kind(const ordered_json &j, const std::string &kind) {
    if (kind == "constant") {
        if (!j.contains("value")) throw validation_error("constant.value: missing");
        return SymbolSpec::constant(complex_from_json(j["value"], "constant.value"));
    }
    if (kind == "indicator") {
        double alpha = number_field(j, "alpha", "indicator");
        double beta;
        if (j.contains("beta") && j["beta"].is_string() && j["beta"] == "inf")
            beta = std::numeric_limits<double>::infinity();
        else
            beta = number_field(j, "beta", "indicator");
        return SymbolSpec::indicator(alpha, beta);
    }
    if (kind == "piecewise-constant") {
        if (!j.contains("knots") || !j["knots"].is_array())
            throw validation_error("piecewise-constant.knots: expected an array");
        if (!j.contains("values") || !j["values"].is_array())
            throw validation_error("piecewise-constant.values: expected an array");
        std::vector<double> knots;
        for (const auto &k : j["knots"]) {
            if (!k.is_number())
                throw validation_error("piecewise-constant.knots: expected numbers");
            knots.push_back(k.get<double>());
        }
        std::vector<std::complex<double>> values;
        for (const auto &v : j["values"])
            values.push_back(complex_from_json(v, "piecewise-constant.values"));
        return SymbolSpec::piecewise(std::move(knots), std::move(values));
    }
    if (kind == "cosine") return SymbolSpec::cosine();
    if (kind == "power") return SymbolSpec::power(number_field(j, "exponent", "power"));
    if (kind == "exp-complex") {
        if (!j.contains("lambda")) throw validation_error("exp-complex.lambda: missing");
        return SymbolSpec::exp_complex(complex_from_json(j["lambda"], "exp-complex.lambda"));
    }
    if (kind == "sampled") {
        SampledFunction g;
        g.origin = number_field(j, "origin", "sampled");
        g.step = number_field(j, "step", "sampled");
        if (!j.contains("samples") || !j["samples"].is_array())
            throw validation_error("sampled.samples: expected an array");
        for (const auto &s : j["samples"])
            g.samples.push_back(complex_from_json(s, "sampled.samples"));
        return SymbolSpec::sampled(std::move(g));
    }
    if (kind == "sum") {
        if (!j.contains("terms") || !j["terms"].is_array())
            throw validation_error("sum.terms: expected an array");
        std::vector<std::pair<std::complex<double>, SymbolSpec>> terms;
        for (const auto &t : j["terms"]) {
            if (!t.is_object() || !t.contains("weight") || !t.contains("spec"))
                throw validation_error("sum.terms: entries need weight and spec");
            terms.emplace_back(complex_from_json(t["weight"], "sum.terms.weight"),
                               symbol_from_json(t["spec"]));
        }
        return SymbolSpec::sum(std::move(terms));
    }
    throw validation_error("kind: unknown symbol kind '" + kind + "'");
}

// Optional `growth` declaration; must not understate the derived class.
void check_growth_field(const ordered_json &j, const SymbolSpec &spec) {
    if (!j.contains("growth")) return;
    const ordered_json &g = j["growth"];
    Growth derived = spec.growth();
    if (g.is_string()) {
        std::string s = g.get<std::string>();
        if (s == "bounded") {
            if (derived.cls == GrowthClass::Subgaussian)
                throw validation_error("growth: symbol is not bounded");
            return;
        }
        if (s == "vanishing-at-infinity") {
            if (!spec.vanishes_at_infinity())
                throw validation_error("growth: symbol does not vanish at infinity");
            return;
        }
        throw validation_error("growth: expected bounded, vanishing-at-infinity, or "
                               "{\"class\":\"subgaussian\",\"delta\":d}");
    }
    if (g.is_object() && g.contains("class") && g["class"] == "subgaussian") {
        double delta = number_field(g, "delta", "growth");
        if (!(delta < 1.0)) throw validation_error("growth.delta: must be < 1");
        if (derived.delta > delta)
            throw validation_error("growth.delta: understates the symbol's growth");
        return;
    }
    throw validation_error("growth: malformed declaration");
}

SymbolSpec symbol_from_json(const ordered_json &j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw validation_error("kind: every symbol object needs a string `kind`");
    SymbolSpec spec = parse_kind(j, j["kind"].get<std::string>());
    spec.validate();
    check_growth_field(j, spec);
    return spec;
}

ordered_json symbol_to_json(const SymbolSpec &spec) {
    ordered_json j;
    std::visit(
        [&](const auto &node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ConstantSymbol>) {
                j["kind"] = "constant";
                j["value"] = complex_to_json(node.value);
            } else if constexpr (std::is_same_v<T, IndicatorSymbol>) {
                j["kind"] = "indicator";
                j["alpha"] = node.alpha;
                if (std::isfinite(node.beta))
                    j["beta"] = node.beta;
                else
                    j["beta"] = "inf";
            } else if constexpr (std::is_same_v<T, PiecewiseConstantSymbol>) {
                j["kind"] = "piecewise-constant";
                j["knots"] = node.knots;
                ordered_json vals = ordered_json::array();
                for (auto v : node.values) vals.push_back(complex_to_json(v));
                j["values"] = vals;
            } else if constexpr (std::is_same_v<T, CosineSymbol>) {
                j["kind"] = "cosine";
            } else if constexpr (std::is_same_v<T, PowerSymbol>) {
                j["kind"] = "power";
                j["exponent"] = node.exponent;
            } else if constexpr (std::is_same_v<T, ExpComplexSymbol>) {
                j["kind"] = "exp-complex";
                j["lambda"] = complex_to_json(node.lambda);
            } else if constexpr (std::is_same_v<T, SampledSymbol>) {
                j["kind"] = "sampled";
                j["origin"] = node.grid.origin;
                j["step"] = node.grid.step;
                ordered_json vals = ordered_json::array();
                for (auto v : node.grid.samples) vals.push_back(complex_to_json(v));
                j["samples"] = vals;
            } else if constexpr (std::is_same_v<T, SumSymbol>) {
                j["kind"] = "sum";
                ordered_json terms = ordered_json::array();
                for (const auto &[w, sub] : node.terms) {
                    ordered_json t;
                    t["weight"] = complex_to_json(w);
                    t["spec"] = symbol_to_json(sub);
                    terms.push_back(t);
                }
                j["terms"] = terms;
            }
        },
        spec.node());
    return j;
}

} // namespace

SymbolSpec symbol_from_json_text(const std::string &text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception &e) {
        throw validation_error(std::string("document: JSON parse failure: ") + e.what());
    }
    return symbol_from_json(j);
}

std::string symbol_to_json_text(const SymbolSpec &spec) {
    return symbol_to_json(spec).dump(2) + "\n";
}

SymbolSpec load_symbol_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw validation_error("file: cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return symbol_from_json_text(ss.str());
}

void save_symbol_file(const SymbolSpec &spec, const std::string &path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << symbol_to_json_text(spec);
}

TargetSequence named_target(const std::string &name, std::int64_t max_index) {
    if (max_index < 1) throw std::domain_error("named_target: max_index must be >= 1");
    auto fill = [&](std::function<std::complex<double>(std::int64_t)> rule) {
        std::vector<std::complex<double>> prefix(static_cast<std::size_t>(max_index) + 1);
        parallel_for(max_index + 1,
                     [&](std::ptrdiff_t n) { prefix[static_cast<std::size_t>(n)] = rule(n); });
        return make_target(std::move(prefix), rule);
    };
    if (name == "cos-sqrt")
        return fill([](std::int64_t n) {
            return std::complex<double>(std::cos(std::sqrt(static_cast<double>(n))), 0.0);
        });
    if (name == "exp-i-sqrt")
        return fill([](std::int64_t n) {
            double s = std::sqrt(static_cast<double>(n));
            return std::complex<double>(std::cos(s), std::sin(s));
        });
    if (name == "constant")
        return fill([](std::int64_t) { return std::complex<double>(1.0, 0.0); });
    if (name == "alternating")
        return fill([](std::int64_t n) {
            return std::complex<double>((n % 2 == 0) ? 1.0 : -1.0, 0.0);
        });
    if (name.rfind("gamma-of:", 0) == 0) {
        SymbolSpec spec = load_symbol_file(name.substr(9));
        EigenSequence seq = gamma_prefix(spec, max_index);
        return make_target(std::move(seq.values));
    }
    throw validation_error("target: unknown named target '" + name + "'");
}

TargetSequence load_target_csv(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw validation_error("file: cannot open '" + path + "'");
    std::vector<std::complex<double>> prefix;
    std::string line;
    std::int64_t expect = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("n,", 0) == 0) continue; // header
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        std::int64_t n;
        double re, im = 0.0;
        if (!(ss >> n >> re)) throw validation_error("target: malformed row '" + line + "'");
        ss >> im;
        if (n != expect)
            throw validation_error("target: indices must be contiguous from 0 (got " +
                                   std::to_string(n) + ", expected " +
                                   std::to_string(expect) + ")");
        prefix.emplace_back(re, im);
        ++expect;
    }
    if (prefix.empty()) throw validation_error("target: no rows");
    return make_target(std::move(prefix));
}

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string gamma_csv(const EigenSequence &seq, bool with_err) {
    std::string out = with_err ? "n,re,im,err\n" : "n,re,im\n";
    for (std::size_t n = 0; n < seq.values.size(); ++n) {
        out += std::to_string(n);
        out += ',';
        out += format_double(seq.values[n].real());
        out += ',';
        out += format_double(seq.values[n].imag());
        if (with_err) {
            out += ',';
            out += format_double(seq.err[n]);
        }
        out += '\n';
    }
    return out;
}

void write_gamma_csv(const EigenSequence &seq, bool with_err, const std::string &path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << gamma_csv(seq, with_err);
}

std::string approx_report_json(const ApproxReport &r) {
    ordered_json j;
    j["bandwidth"] = r.bandwidth;
    j["fejer_order"] = r.fejer_order;
    j["split_n"] = r.split_n;
    j["tail_sup_error"] = r.tail_sup_error;
    j["head_residual"] = r.head_residual;
    j["total_sup_error_estimate"] = r.total_sup_error_estimate;
    j["amplification_factor"] = r.amplification_factor;
    j["checked_to"] = r.checked_to;
    j["feasible"] = r.feasible;
    return j.dump(2) + "\n";
}

} // namespace fockseq
