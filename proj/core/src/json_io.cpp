#include "liefan/json_io.hpp"

#include "liefan/errors.hpp"

#include <json.hpp>

#include <algorithm>

namespace liefan {

namespace {

using Json = nlohmann::ordered_json;

Json rat_json(const Rat& value) { return rat_to_string(value); }

Rat rat_from(const Json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw ConfigError("expected a rational as string or integer");
}

Json int_json(const Int& value) {
    if (value.fits_slong_p()) return value.get_si();
    return value.get_str();
}

Int int_from(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw ConfigError("expected an integer as number or string");
}

Json weight_json(const Weight& w) {
    Json finite = Json::array();
    for (const Rat& c : w.finite()) finite.push_back(rat_json(c));
    Json j;
    j["finite"] = std::move(finite);
    j["level"] = rat_json(w.level());
    j["grade"] = rat_json(w.grade());
    return j;
}

Weight weight_from(const Json& j) {
    if (!j.is_object() || !j.contains("finite"))
        throw ConfigError("weight JSON needs a \"finite\" array");
    std::vector<Rat> finite;
    for (const auto& c : j.at("finite")) finite.push_back(rat_from(c));
    Rat level = j.contains("level") ? rat_from(j.at("level")) : Rat(0);
    Rat grade = j.contains("grade") ? rat_from(j.at("grade")) : Rat(0);
    return Weight(std::move(finite), std::move(level), std::move(grade));
}

Series series_from_letter(const std::string& letter) {
    if (letter == "A") return Series::A;
    if (letter == "B") return Series::B;
    if (letter == "C") return Series::C;
    if (letter == "D") return Series::D;
    if (letter == "G") return Series::G;
    throw UnsupportedAlgebraError("unsupported series: " + letter);
}

std::string series_to_letter(Series s) {
    switch (s) {
        case Series::A: return "A";
        case Series::B: return "B";
        case Series::C: return "C";
        case Series::D: return "D";
        case Series::G: return "G";
    }
    return "?";
}

AlgebraSpec algebra_from(const Json& j) {
    if (!j.is_object()) throw ConfigError("algebra descriptor must be an object");
    if (!j.contains("series") || !j.contains("rank"))
        throw ConfigError("algebra descriptor needs \"series\" and \"rank\"");
    Series series = series_from_letter(j.at("series").get<std::string>());
    int rank = j.at("rank").get<int>();
    int twist = j.contains("twist") ? j.at("twist").get<int>() : 0;

    if (j.contains("simple_roots")) {
        if (twist != 0)
            throw ConfigError("explicit simple roots are supported for finite algebras only");
        std::vector<Weight> simples;
        std::size_t dim = 0;
        for (const auto& row : j.at("simple_roots")) {
            std::vector<Rat> v;
            for (const auto& c : row) v.push_back(rat_from(c));
            if (dim == 0) dim = v.size();
            if (v.size() != dim) throw ConfigError("inconsistent simple root dimensions");
            simples.push_back(Weight::classical(std::move(v)));
        }
        GramForm gram = GramForm::identity(static_cast<int>(dim));
        if (j.contains("gram")) {
            std::vector<std::vector<Rat>> m;
            for (const auto& row : j.at("gram")) {
                std::vector<Rat> v;
                for (const auto& c : row) v.push_back(rat_from(c));
                m.push_back(std::move(v));
            }
            gram = GramForm(std::move(m));
        }
        AlgebraKind declared{series, rank, 0};
        AlgebraSpec spec = AlgebraSpec::finite_from_simple_roots(std::move(simples),
                                                                 std::move(gram),
                                                                 declared.name());
        if (spec.kind().series != series || spec.kind().rank != rank)
            throw ConfigError("declared kind " + declared.name() +
                              " does not match the supplied simple roots (" +
                              spec.kind().name() + ")");
        return spec;
    }
    if (twist == 0) return AlgebraSpec::finite(series, rank);
    return AlgebraSpec::affine(series, rank, twist);
}

Json algebra_json(const AlgebraSpec& spec) {
    Json j;
    j["series"] = series_to_letter(spec.kind().series);
    j["rank"] = spec.kind().rank;
    if (spec.is_affine()) {
        j["twist"] = spec.kind().twist;
        return j;
    }
    // Non-canonical realizations carry their root data explicitly.
    AlgebraSpec canonical = AlgebraSpec::finite(spec.kind().series, spec.kind().rank);
    bool is_canonical = canonical.ambient_dim() == spec.ambient_dim() &&
                        canonical.classical_simple_roots() == spec.classical_simple_roots() &&
                        canonical.gram().matrix() == spec.gram().matrix();
    if (!is_canonical) {
        Json roots = Json::array();
        for (const Weight& s : spec.classical_simple_roots()) {
            Json row = Json::array();
            for (const Rat& c : s.finite()) row.push_back(rat_json(c));
            roots.push_back(std::move(row));
        }
        j["simple_roots"] = std::move(roots);
        Json gram = Json::array();
        for (const auto& row : spec.gram().matrix()) {
            Json r = Json::array();
            for (const Rat& c : row) r.push_back(rat_json(c));
            gram.push_back(std::move(r));
        }
        j["gram"] = std::move(gram);
    }
    return j;
}

// Deterministic term order for rendered series: grade-major descending,
// then lexicographic.
std::vector<std::pair<Weight, Int>> sorted_terms(const SignedSeries& s) {
    std::vector<std::pair<Weight, Int>> terms(s.terms().begin(), s.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int c = cmp(a.first.grade(), b.first.grade());
        if (c != 0) return c > 0;
        return Weight::compare(a.first, b.first) < 0;
    });
    return terms;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string weight_to_json(const Weight& w) { return dump(weight_json(w)); }

Weight weight_from_json(const std::string& text) {
    return weight_from(Json::parse(text, nullptr, true));
}

AlgebraSpec algebra_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    return algebra_from(j);
}

std::string algebra_to_json(const AlgebraSpec& spec) { return dump(algebra_json(spec)); }

InjectionSpec injection_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("injection descriptor must be an object");
    if (j.contains("preset")) return InjectionSpec::preset(j.at("preset").get<std::string>());
    if (!j.contains("ambient") || !j.contains("sub") || !j.contains("projection"))
        throw ConfigError("injection descriptor needs ambient, sub and projection");
    AlgebraSpec ambient = algebra_from(j.at("ambient"));
    AlgebraSpec sub = algebra_from(j.at("sub"));
    std::vector<std::vector<Rat>> projection;
    for (const auto& row : j.at("projection")) {
        std::vector<Rat> v;
        for (const auto& c : row) v.push_back(rat_from(c));
        projection.push_back(std::move(v));
    }
    Rat level_scale = j.contains("level_scale") ? rat_from(j.at("level_scale")) : Rat(1);
    return InjectionSpec(std::move(ambient), std::move(sub), std::move(projection),
                         std::move(level_scale));
}

std::string singular_to_json(const AlgebraSpec& spec, const SingularElement& element) {
    Json j;
    j["algebra"] = algebra_json(spec);
    j["highest_weight"] = weight_json(element.highest_weight);
    j["cutoff"] = rat_json(element.grade_cutoff);
    Json terms = Json::array();
    for (const auto& [w, sign] : sorted_terms(element.series)) {
        Json t;
        t["weight"] = weight_json(w);
        t["sign"] = int_json(sign);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return dump(j);
}

SingularDocument singular_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    SingularElement element;
    AlgebraSpec spec = algebra_from(j.at("algebra"));
    element.highest_weight = weight_from(j.at("highest_weight"));
    element.grade_cutoff = rat_from(j.at("cutoff"));
    for (const auto& t : j.at("terms"))
        element.series.add_term(weight_from(t.at("weight")), int_from(t.at("sign")));
    return SingularDocument{std::move(spec), std::move(element)};
}

std::string branching_to_json(const BranchingResult& result) {
    Json j;
    Json coefficients = Json::array();
    for (const auto& [w, b] : sorted_terms(result.coefficients)) {
        Json entry;
        entry["weight"] = weight_json(w);
        entry["multiplicity"] = int_json(b);
        coefficients.push_back(std::move(entry));
    }
    j["coefficients"] = std::move(coefficients);
    if (result.sub_is_affine) {
        Json classes = Json::array();
        for (const BranchingFunction& f : branching_functions(result)) {
            Json c;
            c["highest_weight"] = weight_json(f.class_rep);
            Json series = Json::array();
            for (const auto& [exponent, coefficient] : f.q_series)
                series.push_back(Json::array({int_json(exponent), int_json(coefficient)}));
            c["series"] = std::move(series);
            classes.push_back(std::move(c));
        }
        j["classes"] = std::move(classes);
    }
    return dump(j);
}

std::string weight_multiplicities_to_json(const AlgebraSpec& spec, const AnomalousTable& table) {
    Json j;
    j["algebra"] = algebra_json(spec);
    if (table.window().floor_grade)
        j["floor_grade"] = rat_json(*table.window().floor_grade);
    Json terms = Json::array();
    for (const auto& [w, m] : sorted_terms(table.values())) {
        Json t;
        t["weight"] = weight_json(w);
        t["multiplicity"] = int_json(m);
        terms.push_back(std::move(t));
    }
    j["multiplicities"] = std::move(terms);
    return dump(j);
}

std::string fan_to_json(const Fan& fan) {
    Json j;
    j["gamma0"] = weight_json(fan.gamma0());
    j["s0"] = int_json(fan.s0());
    j["cutoff"] = rat_json(fan.cutoff());
    Json entries = Json::array();
    for (const Fan::Entry& e : fan.entries()) {
        Json entry;
        entry["gamma"] = weight_json(e.gamma);
        entry["sign"] = int_json(e.sign);
        entries.push_back(std::move(entry));
    }
    j["entries"] = std::move(entries);
    return dump(j);
}

} // namespace liefan
