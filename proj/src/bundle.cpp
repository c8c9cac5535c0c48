#include "disc/bundle.hpp"

#include <fstream>
#include <sstream>

#include "disc/reflection.hpp"
#include "disc/smash.hpp"
#include "json.hpp"

namespace disc {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Scalar parse_scalar(const std::string& text) {
    CommPoly p = parse_comm(text, {});
    if (!p.is_constant()) throw BundleError("expected a scalar, got: " + text);
    if (p.is_zero()) return Scalar::zero();
    return p.terms.begin()->second;
}

ScalarMat parse_matrix(const std::string& text, size_t n) {
    ScalarMat m;
    for (const std::string& row : split_on(text, '|')) {
        ScalarVec r;
        for (const std::string& tok : split_ws(row)) r.push_back(parse_scalar(tok));
        if (r.size() != n) throw BundleError("matrix row has wrong width: " + row);
        m.push_back(std::move(r));
    }
    if (m.size() != n) throw BundleError("matrix has wrong height: " + text);
    return m;
}

Scalar scalar_det(ScalarMat m) {
    size_t n = m.size();
    Scalar det = Scalar::one();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return Scalar::zero();
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = Scalar(-1) * det;
        }
        det = det * m[col][col];
        Scalar inv = m[col][col].inv();
        for (size_t i = col + 1; i < n; ++i) {
            Scalar f = m[i][col] * inv;
            if (f.is_zero()) continue;
            for (size_t j = col; j < n; ++j) m[i][j] = m[i][j] - f * m[col][j];
        }
    }
    return det;
}

struct Section {
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;
};

struct RawBundle {
    std::string id;
    std::vector<Section> sections;

    const Section* find(const std::string& name) const {
        for (const auto& s : sections)
            if (s.name == name) return &s;
        return nullptr;
    }
};

RawBundle tokenize(const std::string& text, const std::string& src) {
    RawBundle raw;
    Section* cur = nullptr;
    int lineno = 0;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']') throw BundleError(src + ":" + std::to_string(lineno) +
                                                   ": malformed section header");
            raw.sections.push_back({t.substr(1, t.size() - 2), {}});
            cur = &raw.sections.back();
            continue;
        }
        size_t colon = t.find(':');
        if (colon == std::string::npos) {
            // bare line (e.g. "auto" in [basis])
            if (!cur) throw BundleError(src + ":" + std::to_string(lineno) + ": stray line");
            cur->entries.emplace_back(t, "");
            continue;
        }
        std::string key = trim(t.substr(0, colon));
        std::string val = trim(t.substr(colon + 1));
        if (!cur) {
            if (key == "id")
                raw.id = val;
            else
                throw BundleError(src + ": unknown top-level key " + key);
        } else {
            cur->entries.emplace_back(key, val);
        }
    }
    if (raw.id.empty()) throw BundleError(src + ": missing id");
    return raw;
}

std::unique_ptr<AlgebraPresentation> build_algebra(const Section& sec) {
    std::vector<std::string> gens;
    std::vector<int> degrees;
    std::optional<RationalFunction> hilbert;
    std::vector<std::pair<std::string, std::string>> relations;
    for (const auto& [k, v] : sec.entries) {
        if (k == "generators")
            gens = split_ws(v);
        else if (k == "degrees") {
            for (const std::string& t : split_ws(v)) degrees.push_back(std::stoi(t));
        } else if (k == "hilbert")
            hilbert = RationalFunction::parse(v);
        else if (k == "relation") {
            size_t arrow = v.find("->");
            if (arrow == std::string::npos)
                throw BundleError("relation needs '->': " + v);
            relations.emplace_back(trim(v.substr(0, arrow)), trim(v.substr(arrow + 2)));
        } else
            throw BundleError("[algebra]: unknown key " + k);
    }
    if (gens.empty()) throw BundleError("[algebra]: missing generators");
    if (degrees.empty()) degrees.assign(gens.size(), 1);
    // Rules need a presentation for parsing; build a rule-free one first.
    AlgebraPresentation scratch(gens, {}, degrees, std::nullopt);
    std::vector<RewriteRule> rules;
    for (const auto& [lhs, rhs] : relations) {
        RewriteRule r;
        r.lhs = parse_word(lhs, scratch);
        r.rhs = parse_expr(rhs, scratch);
        rules.push_back(std::move(r));
    }
    return std::make_unique<AlgebraPresentation>(gens, std::move(rules), degrees, hilbert);
}

}  // namespace

const AlgebraPresentation& InstanceBundle::pres() const {
    if (own_pres) return *own_pres;
    if (h2) return h2->pres;
    throw BundleError("bundle has no presentation");
}

const ActionSpec& InstanceBundle::action() const {
    if (!act) throw BundleError(id + ": no Hopf action in this bundle");
    return *act;
}

const HopfAlgebraSpec& InstanceBundle::hopf() const {
    if (own_hopf) return *own_hopf;
    if (h2) return h2->hopf;
    throw BundleError(id + ": no Hopf algebra in this bundle");
}

std::optional<std::string> InstanceBundle::expect(const std::string& key) const {
    auto it = expected.find(key);
    if (it == expected.end()) return std::nullopt;
    return it->second;
}

std::optional<NCPoly> InstanceBundle::expect_nc(const std::string& key) const {
    auto raw = expect(key);
    if (!raw) return std::nullopt;
    return parse_expr(*raw, pres());
}

std::optional<CommPoly> InstanceBundle::expect_comm(const std::string& key) const {
    auto raw = expect(key);
    if (!raw) return std::nullopt;
    return parse_comm(*raw, central.names());
}

std::unique_ptr<InstanceBundle> parse_bundle(const std::string& text,
                                             const std::string& source_name) {
    RawBundle raw = tokenize(text, source_name);
    auto b = std::make_unique<InstanceBundle>();
    b->id = raw.id;

    const Section* hopf_sec = raw.find("hopf");
    std::string hopf_type;
    if (hopf_sec)
        for (const auto& [k, v] : hopf_sec->entries)
            if (k == "type") hopf_type = v;

    if (const Section* alg = raw.find("algebra")) {
        if (hopf_type == "h2n2")
            throw BundleError(source_name + ": h2n2 bundles take their algebra from the "
                                            "family; omit [algebra]");
        b->own_pres = build_algebra(*alg);
    }

    if (hopf_sec) {
        if (hopf_type == "group") {
            if (!b->own_pres) throw BundleError(source_name + ": group bundle needs [algebra]");
            std::vector<std::string> elements;
            std::vector<std::vector<int>> table;
            std::map<std::string, ScalarMat> action_rows;
            std::string hdet_spec;
            for (const auto& [k, v] : hopf_sec->entries) {
                if (k == "type") continue;
                if (k == "elements")
                    elements = split_ws(v);
                else if (k == "table") {
                    auto index_of = [&](const std::string& l) {
                        for (size_t i = 0; i < elements.size(); ++i)
                            if (elements[i] == l) return static_cast<int>(i);
                        throw BundleError("table: unknown element " + l);
                    };
                    for (const std::string& row : split_on(v, '|')) {
                        std::vector<int> r;
                        for (const std::string& tok : split_ws(row)) r.push_back(index_of(tok));
                        if (r.size() != elements.size())
                            throw BundleError("table row has wrong width: " + row);
                        table.push_back(std::move(r));
                    }
                } else if (k.rfind("action ", 0) == 0) {
                    action_rows[trim(k.substr(7))] =
                        parse_matrix(v, b->own_pres->gen_count());
                } else if (k == "hdet")
                    hdet_spec = v;
                else
                    throw BundleError("[hopf]: unknown key " + k);
            }
            if (table.size() != elements.size())
                throw BundleError(source_name + ": table has wrong height");
            b->own_hopf = std::make_unique<HopfAlgebraSpec>(group_algebra(elements, table));
            b->is_group = true;
            b->act.emplace();
            b->act->hopf = b->own_hopf.get();
            b->act->pres = b->own_pres.get();
            for (const std::string& e : elements) {
                auto it = action_rows.find(e);
                if (it == action_rows.end())
                    throw BundleError(source_name + ": missing action matrix for " + e);
                b->act->matrices.push_back(it->second);
            }
            if (hdet_spec == "det") {
                Character c;
                for (const auto& m : b->act->matrices) c.values.push_back(scalar_det(m));
                b->hdet = std::move(c);
            } else if (!hdet_spec.empty()) {
                Character c;
                for (const std::string& tok : split_ws(hdet_spec))
                    c.values.push_back(parse_scalar(tok));
                b->hdet = std::move(c);
            }
        } else if (hopf_type == "h2n2") {
            int n = -1, i = -1, j = -1;
            std::map<std::string, std::string> action_rows;
            std::string hdet_spec;
            for (const auto& [k, v] : hopf_sec->entries) {
                if (k == "type") continue;
                if (k == "n")
                    n = std::stoi(v);
                else if (k == "i")
                    i = std::stoi(v);
                else if (k == "j")
                    j = std::stoi(v);
                else if (k.rfind("action ", 0) == 0)
                    action_rows[trim(k.substr(7))] = v;
                else if (k == "hdet")
                    hdet_spec = v;
                else
                    throw BundleError("[hopf]: unknown key " + k);
            }
            if (n < 0 || i < 0 || j < 0)
                throw BundleError(source_name + ": h2n2 needs n, i, j");
            b->h2 = h2n2(n, i, j);
            if (action_rows.empty()) {
                b->act = b->h2->action;
                b->hdet = b->h2->hdet;
            } else {
                // Explicit action override: every basis element must be given.
                b->act.emplace();
                b->act->hopf = &b->h2->hopf;
                b->act->pres = &b->h2->pres;
                for (const std::string& label : b->h2->hopf.labels) {
                    auto it = action_rows.find(label);
                    if (it == action_rows.end())
                        throw BundleError(source_name + ": missing action matrix for " + label);
                    b->act->matrices.push_back(
                        parse_matrix(it->second, b->h2->pres.gen_count()));
                }
            }
            if (!hdet_spec.empty()) {
                Character c;
                for (const std::string& tok : split_ws(hdet_spec))
                    c.values.push_back(parse_scalar(tok));
                b->hdet = std::move(c);
            }
        } else {
            throw BundleError(source_name + ": unknown hopf type '" + hopf_type + "'");
        }
        auto fails = b->act->verify();
        if (!fails.empty())
            throw BundleError(source_name + ": action invalid: " + fails.front());
        if (b->hdet) {
            auto cfails = b->hdet->verify(b->hopf());
            if (!cfails.empty())
                throw BundleError(source_name + ": hdet invalid: " + cfails.front());
        }
    }

    if (!b->own_pres && !b->h2)
        throw BundleError(source_name + ": bundle defines no algebra");
    const AlgebraPresentation& pres = b->pres();

    if (const Section* cen = raw.find("central")) {
        for (const auto& [k, v] : cen->entries) {
            if (k == "claimed") {
                b->central.central_claimed = (v == "true");
                continue;
            }
            if (k == "side") {
                if (v != "left" && v != "right")
                    throw BundleError("[central] side must be left or right");
                b->central.trace_side = v == "left" ? Side::Left : Side::Right;
                continue;
            }
            NCPoly def = parse_expr(v, pres);
            b->central.gens.push_back({k, def, pres.degree_of(def)});
        }
    }
    if (b->central.gens.empty())
        throw BundleError(source_name + ": [central] must list at least one generator");

    if (const Section* bas = raw.find("basis")) {
        bool is_auto = false;
        FreeModuleBasis fb;
        for (const auto& [k, v] : bas->entries) {
            if (k == "auto" && v.empty()) {
                is_auto = true;
                continue;
            }
            NCPoly e = parse_expr(v.empty() ? k : v, pres);
            fb.elements.push_back(e);
            fb.degrees.push_back(pres.degree_of(e));
        }
        if (!is_auto && !fb.elements.empty()) b->explicit_basis = std::move(fb);
    }

    if (const Section* ver = raw.find("verify")) {
        for (const auto& [k, v] : ver->entries) {
            if (k == "confluence_degree")
                b->bounds.confluence = std::stoi(v);
            else if (k == "hilbert_degree")
                b->bounds.hilbert = std::stoi(v);
            else if (k == "main_degree")
                b->bounds.main_theorem = std::stoi(v);
            else if (k == "galois_degree")
                b->bounds.galois = std::stoi(v);
            else if (k == "galois_mode") {
                if (v != "smash" && v != "fixed_ring")
                    throw BundleError("[verify]: galois_mode must be smash or fixed_ring");
                b->bounds.galois_mode = v;
            }
            else
                throw BundleError("[verify]: unknown key " + k);
        }
    }

    if (const Section* exp = raw.find("expected"))
        for (const auto& [k, v] : exp->entries) b->expected[k] = v;

    return b;
}

std::unique_ptr<InstanceBundle> load_bundle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BundleError("cannot open bundle " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_bundle(ss.str(), path);
}

void Report::add(const std::string& name, bool okay, const std::string& detail) {
    checks.push_back({name, okay, detail});
}

void Report::value(const std::string& key, const std::string& val) {
    values.emplace_back(key, val);
}

bool Report::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

std::string Report::human() const {
    std::ostringstream os;
    os << command << " @ " << instance << "\n";
    for (const auto& c : checks) {
        os << "  [" << (c.ok ? "PASS" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) os << " — " << c.detail;
        os << "\n";
    }
    for (const auto& [k, v] : values) os << "  " << k << " = " << v << "\n";
    os << (ok() ? "OK" : "FAILED") << "\n";
    return os.str();
}

std::string Report::json() const {
    nlohmann::ordered_json j;
    j["schema"] = "disc-report/1";
    j["command"] = command;
    j["instance"] = instance;
    j["ok"] = ok();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks)
        j["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    j["values"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : values) j["values"][k] = v;
    return j.dump(2) + "\n";
}

GradedModule build_module(const InstanceBundle& b, Report& rep) {
    const AlgebraPresentation& pres = b.pres();
    bool central_ok = verify_central(b.central, pres);
    if (b.central.central_claimed)
        rep.add("central generators commute with A", central_ok);
    else
        rep.add("subring declared non-central (fixed-ring case)", true,
                central_ok ? "actually central" : "confirmed non-central");

    FreeModuleBasis basis;
    if (b.explicit_basis) {
        basis = *b.explicit_basis;
    } else {
        FindBasisResult fb = find_free_basis(pres, b.central);
        if (!fb.ok) throw BundleError(b.id + ": basis discovery failed: " + fb.error);
        basis = std::move(fb.basis);
    }
    if (auto want = b.expect("rank"))
        rep.add("module rank = " + *want, std::to_string(basis.rank()) == *want,
                "found " + std::to_string(basis.rank()));
    rep.value("rank", std::to_string(basis.rank()));

    GradedModule mod(pres, b.central, std::move(basis));
    FreeBasisReport free_rep = mod.verify_free_basis(mod.basis().top_degree());
    rep.add("basis is free through the top degree", free_rep.ok,
            free_rep.ok ? "" : free_rep.failures.front());
    return mod;
}

Report run_nf(const InstanceBundle& b, const std::string& expr) {
    Report rep;
    rep.command = "nf";
    rep.instance = b.id;
    NCPoly p = parse_expr(expr, b.pres());
    rep.value("input", expr);
    rep.value("normal_form", nc_to_string(p, b.pres()));
    return rep;
}

Report run_confluence(const InstanceBundle& b, int degree) {
    Report rep;
    rep.command = "confluence";
    rep.instance = b.id;
    auto fails = check_local_confluence(b.pres(), degree);
    rep.add("all critical pairs resolve through degree " + std::to_string(degree),
            fails.empty(),
            fails.empty() ? "0 unresolved"
                          : std::to_string(fails.size()) + " unresolved, first overlap " +
                                word_to_string(fails.front().overlap_word, b.pres()));
    rep.value("unresolved", std::to_string(fails.size()));
    return rep;
}

Report run_hilbert(const InstanceBundle& b, int degree) {
    Report rep;
    rep.command = "hilbert";
    rep.instance = b.id;
    HilbertReport h = hilbert_check(b.pres(), degree);
    rep.add("dimensions match the declared series through degree " +
                std::to_string(degree),
            h.ok,
            h.ok ? "" : "first mismatch at degree " + std::to_string(h.first_mismatch_degree));
    std::ostringstream dims;
    for (size_t d = 0; d < h.computed.size(); ++d) dims << (d ? " " : "") << h.computed[d];
    rep.value("dimensions", dims.str());
    return rep;
}

Report run_disc(const InstanceBundle& b) {
    Report rep;
    rep.command = "disc";
    rep.instance = b.id;
    GradedModule mod = build_module(b, rep);
    DiscriminantResult d = mod.discriminant();
    rep.add("trace matrix is nondegenerate", !d.degenerate);
    if (d.degenerate) return rep;
    rep.value("disc", comm_to_string(d.canonical));
    if (auto want = b.expect_comm("disc"))
        rep.add("disc matches the expected central form", equal_up_to_scalar(d.raw, *want),
                "expected " + comm_to_string(canonical_up_to_scalar(*want)));
    if (auto want = b.expect_nc("disc_gen")) {
        NCPoly in_A = mod.expand(d.canonical);
        rep.add("disc matches the expected form in the generators",
                nc_equal_up_to_scalar(in_A, *want, b.pres()));
    }
    return rep;
}

Report run_norm_different(const InstanceBundle& b) {
    Report rep;
    rep.command = "norm-different";
    rep.instance = b.id;
    GradedModule mod = build_module(b, rep);
    const AlgebraPresentation& pres = b.pres();
    NCPoly omega = mod.different_omega();
    rep.value("omega", nc_to_string(nc_canonical(omega, pres), pres));
    if (auto want = b.expect_nc("omega"))
        rep.add("omega matches the expected element",
                nc_equal_up_to_scalar(omega, *want, pres));
    auto mu = mod.nakayama_on_generators();
    for (const auto& [g, img] : mu) {
        std::string gname = pres.gen_names()[g];
        rep.value("mu(" + gname + ")", nc_to_string(img, pres));
        if (auto want = b.expect_nc("mu_" + gname))
            rep.add("mu(" + gname + ") matches", img == *want);
    }
    CommPoly nr = mod.norm(omega);
    DiscriminantResult d = mod.discriminant();
    rep.add("norm(omega) equals the discriminant up to scalar",
            !d.degenerate && equal_up_to_scalar(nr, d.raw));
    rep.value("norm_omega", comm_to_string(canonical_up_to_scalar(nr)));
    return rep;
}

Report run_jacobian(const InstanceBundle& b) {
    Report rep;
    rep.command = "jacobian";
    rep.instance = b.id;
    if (!b.has_hopf() || !b.hdet)
        throw BundleError(b.id + ": jacobian needs a Hopf action with hdet");
    GradedModule mod = build_module(b, rep);
    const AlgebraPresentation& pres = b.pres();
    int l = mod.basis().top_degree();
    int bound = b.bounds.main_theorem + l;
    NCPoly jac = jacobian(b.action(), *b.hdet, b.central, l, bound);
    NCPoly arr = arrangement(b.action(), *b.hdet, b.central, bound);
    NCPoly delta = discriminant_invariant(jac, arr, pres);
    rep.value("jacobian", nc_to_string(jac, pres));
    rep.value("arrangement", nc_to_string(arr, pres));
    rep.value("delta", nc_to_string(delta, pres));
    if (auto want = b.expect_nc("jacobian"))
        rep.add("jacobian matches", nc_equal_up_to_scalar(jac, *want, pres));
    if (auto want = b.expect_nc("arrangement"))
        rep.add("arrangement matches", nc_equal_up_to_scalar(arr, *want, pres));
    if (auto want = b.expect_nc("delta"))
        rep.add("delta matches", nc_equal_up_to_scalar(delta, *want, pres));
    return rep;
}

namespace {

Report verify_main(const InstanceBundle& b, int bound) {
    Report rep;
    rep.command = "verify main";
    rep.instance = b.id;
    if (!b.has_hopf() || !b.hdet)
        throw BundleError(b.id + ": verify main needs a Hopf action with hdet");
    GradedModule mod = build_module(b, rep);
    const AlgebraPresentation& pres = b.pres();
    auto fixed = validate_fixed_ring(mod, b.action(), bound);
    rep.add("R is the fixed ring (Reynolds image) through degree " + std::to_string(bound),
            fixed.empty(), fixed.empty() ? "" : fixed.front());
    MainTheoremReport m = verify_main_theorem(mod, b.action(), *b.hdet, bound);
    for (const auto& c : m.checks) rep.add(c.name, c.ok, c.detail);
    rep.value("jacobian", nc_to_string(m.jac, pres));
    rep.value("arrangement", nc_to_string(m.arr, pres));
    rep.value("delta", nc_to_string(m.delta, pres));
    if (!m.disc.degenerate) rep.value("disc", comm_to_string(m.disc.canonical));
    if (auto want = b.expect_nc("jacobian"))
        rep.add("jacobian matches the expected element",
                nc_equal_up_to_scalar(m.jac, *want, pres));
    if (auto want = b.expect_nc("arrangement"))
        rep.add("arrangement matches the expected element",
                nc_equal_up_to_scalar(m.arr, *want, pres));
    if (auto want = b.expect_nc("delta"))
        rep.add("delta matches the expected element",
                nc_equal_up_to_scalar(m.delta, *want, pres));
    if (auto want = b.expect_comm("disc"))
        rep.add("disc matches the expected central form",
                !m.disc.degenerate && equal_up_to_scalar(m.disc.raw, *want));
    return rep;
}

Report verify_smash(const InstanceBundle& b) {
    Report rep;
    rep.command = "verify smash";
    rep.instance = b.id;
    if (!b.has_hopf()) throw BundleError(b.id + ": verify smash needs a Hopf action");
    GradedModule mod = build_module(b, rep);
    SmashContext ctx{&mod, &b.action()};
    SmashDiscReport s = smash_trace_and_discriminant(ctx);
    rep.add("smash trace matrix is nondegenerate", !s.disc.degenerate);
    rep.add("d(B,R) equals d(A,R)^dim(H) up to scalar", s.matches_power,
            "d(A,R)^m = " + comm_to_string(s.a_disc_power));
    if (!s.disc.degenerate) rep.value("smash_disc", comm_to_string(s.disc.canonical));
    if (auto want = b.expect_comm("smash_disc"))
        rep.add("d(B,R) matches the expected central form",
                !s.disc.degenerate && equal_up_to_scalar(s.disc.raw, *want));
    if (auto want = b.expect_nc("smash_disc_gen")) {
        NCPoly in_A = mod.expand(s.disc.canonical);
        rep.add("d(B,R) matches the expected form in the generators",
                nc_equal_up_to_scalar(in_A, *want, b.pres()));
    }
    return rep;
}

Report verify_galois(const InstanceBundle& b, int bound) {
    Report rep;
    rep.command = "verify galois";
    rep.instance = b.id;
    if (!b.has_hopf()) throw BundleError(b.id + ": verify galois needs a Hopf action");
    GradedModule mod = build_module(b, rep);
    const AlgebraPresentation& pres = b.pres();

    if (b.bounds.galois_mode == "fixed_ring") {
        // Regular trace of A over the declared subring, against the integral
        // action.  The two agree when the subring is central in A; the
        // counterexample bundle documents the failure when it is not.
        bool exact = true;
        std::string first_exact_failure;
        for (int d = 1; d <= bound && exact; ++d)
            for (const Word& w : monomial_basis(pres, d)) {
                NCPoly a = NCPoly::from_word(w);
                NCPoly tr = mod.expand(mod.hs_trace(a));
                NCPoly ta = b.action().act_integral(a);
                if (!(tr == ta)) {
                    exact = false;
                    first_exact_failure = "first failure at " + word_to_string(w, pres);
                    break;
                }
            }
        rep.value("exact_trace_identity", exact ? "pass" : "fail");
        if (auto want = b.expect("galois_exact"))
            rep.add("exact trace identity verdict is '" + *want + "'",
                    (exact ? "pass" : "fail") == *want, first_exact_failure);
        if (auto wexpr = b.expect_nc("galois_witness")) {
            NCPoly tr = mod.expand(mod.hs_trace(*wexpr));
            NCPoly ta = b.action().act_integral(*wexpr);
            rep.value("witness_trace", nc_to_string(tr, pres));
            rep.value("witness_integral_action", nc_to_string(ta, pres));
            if (auto want = b.expect_nc("galois_witness_trace"))
                rep.add("witness trace has the expected value", tr == *want);
            if (auto want = b.expect_nc("galois_witness_integral"))
                rep.add("integral action on the witness has the expected value",
                        ta == *want);
            rep.add("integral action on the witness is nonzero", !ta.is_zero());
        }
        return rep;
    }

    SmashContext ctx{&mod, &b.action()};
    GaloisTraceReport g = galois_trace_check(ctx, bound);
    rep.add("Frobenius system: sum x_i theta(y_i b) = b = sum theta(b x_i) y_i",
            g.frobenius_ok);
    rep.add("<alpha, t> = 1 after normalization", g.pairing_one);
    rep.add("trace = integral action modulo commutators through degree " +
                std::to_string(bound),
            g.ok, g.ok ? "" : g.failures.front());

    // Exact (not mod-commutator) comparison on elements of A.
    GaloisData gd = galois_dual_basis(ctx);
    bool exact = true;
    std::string first_exact_failure;
    for (int d = 1; d <= bound && first_exact_failure.empty(); ++d)
        for (const Word& w : monomial_basis(pres, d)) {
            NCPoly a = NCPoly::from_word(w);
            NCPoly tr = smash_trace_over_A(ctx, gd, ctx.from_A(a));
            NCPoly ta = b.action().act_integral(a);
            if (!(tr == ta)) {
                exact = false;
                first_exact_failure = "first failure at " + word_to_string(w, pres);
                break;
            }
        }
    rep.value("exact_trace_identity", exact ? "pass" : "fail");
    if (auto want = b.expect("galois_exact"))
        rep.add("exact trace identity verdict is '" + *want + "'",
                (exact ? "pass" : "fail") == *want, first_exact_failure);

    if (auto wexpr = b.expect_nc("galois_witness")) {
        NCPoly tr = smash_trace_over_A(ctx, gd, ctx.from_A(*wexpr));
        NCPoly ta = b.action().act_integral(*wexpr);
        rep.value("witness_trace", nc_to_string(tr, pres));
        rep.value("witness_integral_action", nc_to_string(ta, pres));
        if (auto want = b.expect_nc("galois_witness_trace"))
            rep.add("witness trace has the expected value", tr == *want);
        if (auto want = b.expect_nc("galois_witness_integral"))
            rep.add("integral action on the witness has the expected value", ta == *want);
        // The lemma still holds: the two sides differ by a commutator.
        rep.add("witness difference lies in the commutator span",
                in_commutator_span(ctx, ctx.from_A(ta - tr)));
    }
    return rep;
}

// Converts an element of a commutative presentation to a CommPoly on the
// generator names.
CommPoly nc_to_comm(const NCPoly& p, const AlgebraPresentation& pres) {
    CommPoly out;
    for (const auto& [w, c] : p.terms) {
        CommMonomial m;
        for (int g : w) ++m[pres.gen_names()[g]];
        out.add_term(m, c);
    }
    return out;
}

Report verify_reflection(const InstanceBundle& b) {
    Report rep;
    rep.command = "verify reflection";
    rep.instance = b.id;
    if (!b.hopf_is_group())
        throw BundleError(b.id + ": verify reflection needs a group-type bundle");
    const AlgebraPresentation& pres = b.pres();
    const std::vector<std::string>& vars = pres.gen_names();
    std::vector<ScalarMat> group = group_closure(b.action().matrices);
    rep.add("action matrices form a group of order " + std::to_string(group.size()),
            group.size() == b.hopf().dim());

    auto hyper = reflections_and_hyperplanes(group);
    rep.value("hyperplanes", std::to_string(hyper.size()));

    std::vector<CommPoly> invariants;
    for (const auto& g : b.central.gens) invariants.push_back(nc_to_comm(g.definition, pres));
    CommPoly j_det = jacobian_det(invariants, vars);
    CommPoly j_arr = jacobian_from_arrangement(hyper, vars);
    rep.value("jacobian_det", comm_to_string(j_det));
    rep.value("jacobian_arrangement", comm_to_string(j_arr));
    rep.add("derivative Jacobian equals the hyperplane-product Jacobian", j_det == j_arr);

    CommPoly dp = discriminant_poly(group, vars);
    rep.value("discriminant_poly", comm_to_string(dp));
    if (auto want = b.expect("reflection_jacobian"))
        rep.add("Jacobian matches the expected polynomial",
                equal_up_to_scalar(j_det, parse_comm(*want, vars)));
    if (auto want = b.expect("reflection_disc"))
        rep.add("reflection discriminant matches the expected polynomial",
                equal_up_to_scalar(dp, parse_comm(*want, vars)));
    return rep;
}

}  // namespace

Report run_verify(const InstanceBundle& b, const std::string& suite, int degree_override) {
    if (suite == "main")
        return verify_main(b, degree_override > 0 ? degree_override : b.bounds.main_theorem);
    if (suite == "smash") return verify_smash(b);
    if (suite == "galois")
        return verify_galois(b, degree_override > 0 ? degree_override : b.bounds.galois);
    if (suite == "reflection") return verify_reflection(b);
    throw BundleError("unknown verify suite '" + suite + "'");
}

}  // namespace disc
