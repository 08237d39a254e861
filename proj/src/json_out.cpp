#include "logcurves/json_out.hpp"

namespace logcurves {

ojson envelope(const std::string& kind, ojson payload) {
    ojson doc;
    doc["format"] = kFormatTag;
    doc["kind"] = kind;
    for (auto& [k, v] : payload.items()) doc[k] = std::move(v);
    return doc;
}

namespace {

void dfs_tree(const StableTree::Node& node, int& next_id, int my_id, ojson& edges, ojson& labels) {
    for (const auto& kid : node.kids) {
        int kid_id = next_id++;
        edges.push_back(ojson::array({my_id, kid_id}));
        if (kid.leaf >= 0) labels[std::to_string(kid_id)] = kid.leaf;
        else dfs_tree(kid, next_id, kid_id, edges, labels);
    }
}

} // namespace

ojson tree_json(const StableTree& t) {
    ojson j;
    j["arity"] = t.arity();
    j["key"] = t.key();
    j["codim"] = t.codim();
    j["leaves"] = t.arity() + 1; // marks 0..n, mark 0 on the root vertex
    j["output_vertex"] = 0;
    ojson edges = ojson::array();
    ojson labels = ojson::object();
    int next_id = 1;
    dfs_tree(t.root(), next_id, 0, edges, labels);
    j["edges"] = std::move(edges);
    j["labels"] = std::move(labels);
    ojson sets = ojson::array();
    for (const auto& s : t.edge_leafsets()) sets.push_back(s);
    j["edge_leafsets"] = std::move(sets);
    return j;
}

ojson descriptor_json(const NCLogDescriptor& d) {
    ojson j;
    j["base"] = d.base;
    j["base_dim"] = d.base_dim;
    j["fiber_dim"] = d.fiber_dim();
    j["log_dim"] = d.log_dim();
    j["bundles"] = d.bundles;
    ojson strata = ojson::array();
    for (const auto& s : d.strata) {
        ojson e;
        e["tag"] = s.tag;
        e["codim"] = s.codim;
        e["divisors"] = s.divisors;
        strata.push_back(std::move(e));
    }
    j["strata"] = std::move(strata);
    return j;
}

ojson matrix_json(const IntMatrix& m) {
    ojson j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    ojson entries = ojson::array();
    for (int r = 0; r < m.rows; ++r) {
        ojson row = ojson::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

ojson map_json(const LogStructureMap& m) {
    ojson j;
    j["source"] = descriptor_json(m.source);
    j["target"] = descriptor_json(m.target);
    ojson pairs = ojson::array();
    for (const auto& [a, b] : m.stratum_map) pairs.push_back(ojson::array({a, b}));
    j["stratum_map"] = std::move(pairs);
    j["exponents"] = matrix_json(m.exponents);
    ojson matching = ojson::array();
    for (const auto& [bundle, mono] : m.bundle_matching) {
        ojson e;
        e["bundle"] = bundle;
        e["pullback"] = mono;
        matching.push_back(std::move(e));
    }
    j["bundle_matching"] = std::move(matching);
    return j;
}

ojson classify_json(const ClassifyResult& r) {
    ojson j;
    if (std::holds_alternative<EmptyFamily>(r)) {
        j["empty"] = true;
        j["reason"] = std::get<EmptyFamily>(r).reason;
    } else {
        const auto& fam = std::get<MapFamily>(r);
        j["empty"] = false;
        j["source_bundles"] = fam.source_bundles;
        j["target_bundles"] = fam.target_bundles;
        j["positivity_required"] = fam.positivity_required;
    }
    return j;
}

ojson poly_json(const Poly& p) {
    ojson j;
    j["coeffs"] = p.coeffs();
    j["str"] = p.str();
    return j;
}

ojson tables_json(const PoincareTables& t) {
    ojson j;
    j["n"] = t.n;
    ojson conv;
    conv["mbar"] = "marks";
    conv["flc_top"] = "arity";
    conv["fld"] = "arity";
    conv["ld"] = "arity";
    j["conventions"] = std::move(conv);
    j["mbar"] = poly_json(t.mbar);
    j["flc_top"] = poly_json(t.flc_top);
    j["fld"] = poly_json(t.fld);
    j["ld"] = poly_json(t.ld);
    return j;
}

ojson e1_json(const E1Page& p) {
    ojson j;
    j["n"] = p.n;
    j["rows"] = p.rows;
    j["alternating"] = p.alternating;
    return j;
}

ojson purity_json(const PurityReport& r) {
    ojson j;
    j["n"] = r.n;
    j["primes"] = r.primes;
    j["counts_match"] = r.counts_match;
    j["rows_match"] = r.rows_match;
    j["stable_column_match"] = r.stable_column_match;
    j["euler_match"] = r.euler_match;
    j["pass"] = r.pass();
    j["certificate_level"] = r.certificate_level;
    j["page"] = e1_json(r.page);
    j["open_betti"] = poly_json(r.open_betti);
    return j;
}

ojson acyclicity_json(const AcyclicityCertificate& c) {
    ojson j;
    j["family"] = c.family;
    j["parameter"] = c.parameter;
    j["hodge"] = c.hodge;
    j["primes"] = c.primes;
    j["pass"] = c.pass;
    j["certificate_level"] = c.certificate_level;
    return j;
}

ojson formal_model_json(const FormalModel& m) {
    ojson j;
    j["arity"] = m.arity;
    j["dims"] = m.dims;
    j["expected"] = m.expected;
    j["lie_dims"] = m.lie_dims;
    j["lie_expected"] = m.lie_expected;
    j["matches"] = m.matches;
    j["zero_differential"] = m.zero_differential;
    j["certificate_level"] = m.certificate_level;
    return j;
}

ojson pushout_json(const PushoutReport& r) {
    ojson j;
    j["n"] = r.n;
    j["ld"] = poly_json(r.ld);
    j["from_framed"] = poly_json(r.from_framed);
    j["from_open"] = poly_json(r.from_open);
    j["exact"] = r.exact;
    return j;
}

ojson axiom_report_json(const AxiomReport& r) {
    ojson j;
    j["cases"] = r.cases;
    j["failures"] = r.failures;
    j["ok"] = r.ok();
    return j;
}

ojson bv_element_json(const BVElement& e) {
    ojson j;
    ojson terms = ojson::array();
    for (const auto& [m, c] : e.terms) {
        ojson t;
        t["monomial"] = m.str();
        t["degree"] = m.degree();
        t["coefficient"] = c.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    j["str"] = e.str();
    return j;
}

BVExprPtr parse_bv_expr(const ojson& j) {
    if (!j.is_object() || !j.contains("op")) throw std::invalid_argument("expression node must be an object with op");
    const std::string op = j.at("op").get<std::string>();
    if (op == "gen") return make_gen(j.at("i").get<int>());
    if (op == "prod" || op == "sum") {
        std::vector<BVExprPtr> args;
        for (const auto& a : j.at("args")) args.push_back(parse_bv_expr(a));
        return op == "prod" ? make_prod(std::move(args)) : make_sum(std::move(args));
    }
    if (op == "bracket") {
        const auto& args = j.at("args");
        if (args.size() != 2) throw std::invalid_argument("bracket takes two arguments");
        return make_bracket(parse_bv_expr(args[0]), parse_bv_expr(args[1]));
    }
    if (op == "delta") return make_delta(parse_bv_expr(j.at("arg")));
    if (op == "scale") {
        i64 num = j.at("num").get<i64>();
        i64 den = j.contains("den") ? j.at("den").get<i64>() : 1;
        if (den == 0) throw std::invalid_argument("zero denominator");
        return make_scale(Rational(num, den), parse_bv_expr(j.at("arg")));
    }
    throw std::invalid_argument("unknown expression op: " + op);
}

} // namespace logcurves
