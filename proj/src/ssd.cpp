#include "strat/ssd.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "strat/corpus.hpp"
#include "strat/errors.hpp"
#include "strat/ih_oracle.hpp"
#include "strat/intersection.hpp"
#include "strat/orientation.hpp"
#include "strat/resolution.hpp"
#include "strat/witt.hpp"

namespace strat {

namespace {

using nlohmann::json;

const std::map<std::string, std::vector<int>>& shipped_atom_ranks() {
    static const std::map<std::string, std::vector<int>> table = {
        {"pt", {1}},        {"S0", {2}},
        {"S1", {1, 1}},     {"S2", {1, 0, 1}},
        {"S3", {1, 0, 0, 1}}, {"S4", {1, 0, 0, 0, 1}},
        {"T2", {1, 2, 1}},  {"RP2", {1, 0, 0}},
        {"CP2", {1, 0, 1, 0, 1}},
    };
    return table;
}

void validate_shipped_atom(const std::string& name, const FilteredComplex& fc) {
    auto it = shipped_atom_ranks().find(name);
    if (it == shipped_atom_ranks().end()) return;
    if (homology_ranks(fc.complex()) != it->second)
        throw ValidationError("atom '" + name + "' failed its homology validation");
}

DescPtr parse_atom(const json& j) {
    if (j.is_string()) {
        DescPtr d = corpus::named_atom(j.get<std::string>());
        validate_shipped_atom(j.get<std::string>(), *d->atom);
        return d;
    }
    if (!j.is_object()) throw ParseError("atom must be a name or an object");
    std::string name = j.value("name", std::string("atom"));
    if (!j.contains("vertices") || !j.contains("facets")) {
        // named shipped atom written in object form
        DescPtr d = corpus::named_atom(name);
        validate_shipped_atom(name, *d->atom);
        return d;
    }
    int vertices = j.at("vertices").get<int>();
    std::vector<Simplex> facets;
    for (const auto& f : j.at("facets")) {
        Simplex s;
        for (const auto& v : f) {
            int idx = v.get<int>();
            if (idx < 0 || idx >= vertices)
                throw ParseError("facet vertex " + std::to_string(idx) + " out of range");
            s.push_back(idx);
        }
        std::sort(s.begin(), s.end());
        facets.push_back(std::move(s));
    }
    SimplicialComplex k = SimplicialComplex::from_facets(vertices, facets);

    FilteredComplex fc;
    if (j.contains("strata")) {
        const json& st = j.at("strata");
        std::vector<std::string> labels = st.at("labels").get<std::vector<std::string>>();
        std::vector<std::pair<std::string, std::string>> rels;
        for (const auto& r : st.value("relations", json::array()))
            rels.push_back({r.at(0).get<std::string>(), r.at(1).get<std::string>()});
        Poset p = Poset::from_relations(labels, rels);
        std::string def = st.value("default", labels.back());
        std::vector<std::vector<int>> strata(k.dim() + 1);
        for (int d = 0; d <= k.dim(); ++d)
            strata[d].assign(k.simplices(d).size(), p.index_of(def));
        for (const auto& assign : st.value("assign", json::array())) {
            int lab = p.index_of(assign.at("label").get<std::string>());
            for (const auto& simp : assign.at("simplices")) {
                Simplex s = simp.get<Simplex>();
                std::sort(s.begin(), s.end());
                int idx = k.index_of(s);
                if (idx < 0) throw ValidationError("assigned simplex is not in the complex");
                strata[s.size() - 1][idx] = lab;
            }
        }
        fc = FilteredComplex(std::move(k), std::move(p), std::move(strata));
        fc.validate();
    } else {
        fc = FilteredComplex::trivial(std::move(k));
    }
    validate_shipped_atom(name, fc);
    return SpaceDesc::make_atom(std::move(name), std::move(fc));
}

DescPtr parse_expr(const json& j) {
    if (!j.is_object() || j.size() != 1)
        throw ParseError("space expression must be a one-key object");
    const std::string key = j.begin().key();
    const json& val = j.begin().value();
    if (key == "atom") return parse_atom(val);
    if (key == "cone") return SpaceDesc::cone(parse_expr(val));
    if (key == "susp") return SpaceDesc::suspension(parse_expr(val));
    if (key == "join" || key == "prod") {
        if (!val.is_array() || val.size() != 2)
            throw ParseError("'" + key + "' takes a two-element array");
        DescPtr a = parse_expr(val[0]);
        DescPtr b = parse_expr(val[1]);
        return key == "join" ? SpaceDesc::join(a, b) : SpaceDesc::product(a, b);
    }
    throw ParseError("unknown space constructor '" + key + "'");
}

}  // namespace

DescPtr parse_ssd_json(const json& j) {
    if (!j.is_object() || !j.contains("space"))
        throw ParseError("SSD document needs a top-level \"space\" key");
    return parse_expr(j.at("space"));
}

DescPtr parse_ssd_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what());
    }
    return parse_ssd_json(j);
}

DescPtr parse_ssd_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_ssd_text(ss.str());
}

std::string input_digest(const json& input) {
    std::string dump = input.dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json Report::to_json() const {
    json out;
    out["command"] = command;
    out["digest"] = digest;
    out["input"] = input_echo;
    out["result"] = payload;
    return out;
}

std::string Report::to_text() const {
    std::string s = "command: " + command + "\ndigest: " + digest + "\n";
    s += payload.dump(2);
    s += "\n";
    return s;
}

namespace {

json load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON parse error in ") + path + ": " + e.what());
    }
    return j;
}

Perversity parse_perversity(const std::string& text, int n) {
    if (text.empty() || text == "lower-middle" || text == "m") return Perversity::lower_middle(n);
    if (text == "zero") return Perversity::zero(n);
    if (text == "top") return Perversity::top(n);
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(std::stoi(item));
    return Perversity(n, std::move(values));
}

FilteredComplex realized(const DescPtr& d, int subdivide) {
    FilteredComplex fc = realize(d);
    for (int i = 0; i < subdivide; ++i) fc = barycentric(fc);
    return fc;
}

json homology_payload(const DescPtr& d, int subdivide, bool oracle) {
    FilteredComplex fc = realized(d, subdivide);
    json out;
    out["space"] = desc_to_string(d);
    out["dim"] = fc.complex().dim();
    out["f_vector"] = fc.complex().f_vector();
    out["euler"] = fc.complex().euler_characteristic();
    std::vector<int> ranks = homology_ranks(fc.complex());
    out["homology_ranks"] = ranks;
    if (oracle) {
        // independent route: boundary ranks via kernel dimensions
        std::vector<int> check(fc.complex().dim() + 1);
        std::vector<int> bd(fc.complex().dim() + 2, 0);
        for (int deg = 1; deg <= fc.complex().dim(); ++deg) {
            CSCMatrix m = fc.complex().boundary_matrix(deg);
            bd[deg] = m.cols - static_cast<int>(sparse_kernel_basis(m).size());
        }
        for (int i = 0; i <= fc.complex().dim(); ++i)
            check[i] = static_cast<int>(fc.complex().simplices(i).size()) - bd[i] - bd[i + 1];
        if (check != ranks) throw std::logic_error("homology oracle disagrees");
        out["oracle_agrees"] = true;
    }
    return out;
}

json ih_payload(const DescPtr& d, int subdivide, const std::string& perversity, bool oracle) {
    FilteredComplex fc = realized(d, subdivide);
    // report allowability on the complex the pipeline actually analyzes
    if (!is_full(fc)) fc = barycentric(fc);
    Perversity p = parse_perversity(perversity, fc.complex().dim());
    json out;
    out["space"] = desc_to_string(d);
    out["dim"] = fc.complex().dim();
    out["perversity"] = p.values();
    out["ih_ranks"] = ih_ranks(fc, p);
    out["allowable_counts"] = allowable_counts(fc, p);
    if (oracle) {
        std::vector<int> brute = oracle::ih_ranks_bruteforce(fc, p.values());
        if (brute != out["ih_ranks"].get<std::vector<int>>())
            throw std::logic_error("intersection homology oracle disagrees");
        out["oracle_agrees"] = true;
    }
    return out;
}

json witt_payload(const DescPtr& d) {
    WittReport rep = witt_check(d);
    json out;
    out["space"] = desc_to_string(d);
    out["witt"] = rep.overall;
    json entries = json::array();
    for (const auto& e : rep.entries) {
        json je;
        je["stratum"] = e.stratum;
        je["link_dim"] = e.link_dim;
        je["link_parity"] = e.link_even ? "even" : "odd";
        if (e.link_even) je["middle_ih_rank"] = e.middle_rank;
        je["ok"] = e.ok;
        entries.push_back(std::move(je));
    }
    out["strata"] = std::move(entries);
    return out;
}

json signature_payload(const DescPtr& d) {
    json out;
    out["space"] = desc_to_string(d);
    out["dim"] = dim(d);
    out["signature"] = signature(d);
    return out;
}

json corners_json(const FiberedCorners& fc) {
    json out;
    out["space"] = desc_to_string(fc.space);
    out["total_dim"] = fc.total_dim;
    out["depth"] = fc.depth;
    out["blowup_order"] = fc.blowup_order;
    json faces = json::array();
    for (const auto& f : fc.faces) {
        json jf;
        jf["stratum"] = f.stratum;
        jf["fiber"] = desc_to_string(f.fiber_desc);
        jf["fiber_dim"] = f.fiber_dim;
        jf["base"] = desc_to_string(f.base_desc);
        jf["base_dim"] = f.base_dim;
        faces.push_back(std::move(jf));
    }
    out["faces"] = std::move(faces);
    json corners = json::array();
    for (const auto& c : fc.corners) {
        json jc;
        jc["lower"] = c.lower;
        jc["upper"] = c.upper;
        jc["connecting_fiber"] = desc_to_string(c.connecting_fiber);
        jc["connecting_fiber_dim"] = c.connecting_fiber_dim;
        jc["lower_base_dim"] = c.lower_base_dim;
        jc["upper_base_dim"] = c.upper_base_dim;
        corners.push_back(std::move(jc));
    }
    out["corners"] = std::move(corners);
    out["ifs_valid"] = verify_ifs(fc).ok;
    return out;
}

json resolve_payload(const DescPtr& d, const std::string& bundle_base_path) {
    if (bundle_base_path.empty()) return corners_json(*resolve(d));
    DescPtr base = parse_ssd_file(bundle_base_path);
    GridResolution g = resolve_bundle(d, base);
    json out;
    out["fiber_space"] = desc_to_string(g.fiber_space);
    out["base_space"] = desc_to_string(g.base_space);
    out["total_dim"] = g.total_dim;
    out["res_fiber"] = corners_json(*g.res_fiber);
    out["res_base"] = corners_json(*g.res_base);
    json vertical = json::array();
    for (const auto& v : g.vertical) {
        json jv;
        jv["stratum"] = v.stratum;
        jv["fiber"] = desc_to_string(v.fiber_desc);
        jv["fiber_dim"] = v.fiber_dim;
        jv["base_total"] = desc_to_string(v.base_total_desc);
        jv["base_total_dim"] = v.base_total_dim;
        vertical.push_back(std::move(jv));
    }
    out["vertical"] = std::move(vertical);
    json horizontal = json::array();
    bool pullback_ok = true;
    for (const auto& h : g.horizontal) {
        json jh;
        jh["stratum"] = h.stratum;
        jh["fiber"] = desc_to_string(h.fiber_desc);
        jh["fiber_dim"] = h.fiber_dim;
        jh["base_of_base"] = desc_to_string(h.base_of_base_desc);
        jh["base_total"] = desc_to_string(h.base_total_desc);
        // pull-back square: fiber of phi^h equals the fiber of the matching
        // face bundle of res(base)
        bool square = false;
        for (const auto& f : g.res_base->faces)
            if (f.stratum == h.stratum)
                square = desc_equal(f.fiber_desc, h.fiber_desc) &&
                         desc_equal(f.base_desc, h.base_of_base_desc);
        jh["pullback_square"] = square;
        pullback_ok = pullback_ok && square;
        horizontal.push_back(std::move(jh));
    }
    out["horizontal"] = std::move(horizontal);
    json sched = json::array();
    for (auto& [a, b] : g.schedule) sched.push_back(json::array({a, b}));
    out["schedule"] = std::move(sched);
    out["pullback_squares_ok"] = pullback_ok;
    return out;
}

json orient_check_payload() {
    json suites = json::array();
    auto add = [&](const std::string& name, int cases, bool ok) {
        suites.push_back(json{{"suite", name}, {"cases", cases}, {"pass", ok}});
    };

    {
        bool ok = true;
        int cases = 0;
        for (int i = 0; i <= 64; ++i)
            for (int j = 0; j <= 64; ++j) {
                ++cases;
                Dyadic lhs =
                    Dyadic(compose_factor(i, j)) * Dyadic::power_of_two(-((i + j) / 2));
                Dyadic rhs = Dyadic::power_of_two(-(i / 2)) * Dyadic::power_of_two(-(j / 2));
                ok = ok && lhs == rhs;
            }
        add("compose-factor normalization", cases, ok);
    }
    {
        bool ok = true;
        for (int n = 1; n <= 64; ++n)
            ok = ok && sign_norm(n) * Dyadic(boundary_factor(n)) == sign_norm(n - 1);
        add("boundary factor absorption", 64, ok);
    }
    {
        bool ok = true;
        int cases = 0;
        for (int k = -6; k <= 6; ++k)
            for (long long m : {1, -3, 5, 7}) {
                ++cases;
                LaurentKO x = LaurentKO::monomial(k, Dyadic(m));
                ok = ok && psi2(psi2(x, true), false) == x;
            }
        add("psi2 inverse", cases, ok);
    }
    {
        bool ok = true;
        int cases = 0;
        for (int k = 0; k <= 10; ++k)
            for (int sigma = -5; sigma <= 5; ++sigma) {
                ++cases;
                ok = ok && orientation_compat_check(k, sigma);
            }
        add("Sullivan vs signature-operator coefficients", cases, ok);
    }
    {
        bool ok = true;
        for (int c = 0; c <= 8; ++c) ok = ok && nns_transfer(c).unit_law_ok;
        add("nns transfer unit law", 9, ok);
    }
    {
        bool ok = true;
        int cases = 0;
        for (int i = 0; i <= 20; ++i)
            for (int j = 0; j <= 20; ++j) {
                ++cases;
                TransferSymbol s =
                    compose_transfer(TransferSymbol::fresh(i), TransferSymbol::fresh(j));
                ok = ok && s.satisfies_normalization();
            }
        add("transfer composition", cases, ok);
    }

    bool all = true;
    for (auto& s : suites) all = all && s["pass"].get<bool>();
    return json{{"suites", suites}, {"all_pass", all}};
}

int dispatch(const std::string& command, const std::string& file, int subdivide,
             const std::string& perversity, bool oracle, const std::string& bundle_base,
             const std::string& format) {
    Report rep;
    rep.command = command;
    if (command == "orient-check") {
        rep.input_echo = json::object();
        rep.payload = orient_check_payload();
    } else {
        json input = load_input(file);
        DescPtr d = parse_ssd_json(input);
        rep.input_echo = input;
        if (command == "homology")
            rep.payload = homology_payload(d, subdivide, oracle);
        else if (command == "ih")
            rep.payload = ih_payload(d, subdivide, perversity, oracle);
        else if (command == "witt")
            rep.payload = witt_payload(d);
        else if (command == "signature")
            rep.payload = signature_payload(d);
        else if (command == "resolve")
            rep.payload = resolve_payload(d, bundle_base);
        else
            throw ValidationError("unknown subcommand '" + command + "'");
    }
    rep.digest = input_digest(rep.input_echo);
    if (format == "json")
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.to_text();
    if (command == "orient-check" && !rep.payload["all_pass"].get<bool>()) return 1;
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"exact computational toolkit for smoothly stratified spaces"};
    app.require_subcommand(1);

    std::string file, perversity = "lower-middle", format = "text", bundle_base;
    int subdivide = 0;
    bool oracle = false;

    auto add_common = [&](CLI::App* sub, bool needs_file) {
        if (needs_file) sub->add_option("file", file, "SSD input file")->required();
        sub->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* homology = app.add_subcommand("homology", "rational homology ranks");
    add_common(homology, true);
    homology->add_option("--subdivide", subdivide, "barycentric subdivisions to apply");
    homology->add_flag("--oracle", oracle, "cross-check with the brute-force oracle");

    CLI::App* ih = app.add_subcommand("ih", "intersection homology ranks");
    add_common(ih, true);
    ih->add_option("--subdivide", subdivide, "barycentric subdivisions to apply");
    ih->add_option("--perversity", perversity,
                   "lower-middle | zero | top | comma list p(2..n)");
    ih->add_flag("--oracle", oracle, "cross-check with the brute-force oracle");

    CLI::App* witt = app.add_subcommand("witt", "Witt condition report");
    add_common(witt, true);

    CLI::App* sig = app.add_subcommand("signature", "signature of a Witt description");
    add_common(sig, true);

    CLI::App* res = app.add_subcommand("resolve", "fibered-corners resolution report");
    add_common(res, true);
    res->add_option("--bundle-base", bundle_base,
                    "treat the input as the fiber of a product bundle over this base");

    CLI::App* oc = app.add_subcommand("orient-check", "orientation calculus identity suites");
    add_common(oc, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    std::string command;
    for (auto* sub : {homology, ih, witt, sig, res, oc})
        if (sub->parsed()) command = sub->get_name();

    try {
        return dispatch(command, file, subdivide, perversity, oracle, bundle_base, format);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace strat
