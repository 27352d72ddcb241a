#include "orbhodge_cli/commands.hpp"

#include "orbhodge_cli/json_io.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace orbhodge::cli {

namespace {

std::string point_string(const LatticePoint &p) {
    std::string s = "(";
    for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
    return s + ")";
}

std::string point_string(const RationalVector &p) {
    std::string s = "(";
    for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + to_string(p[k]);
    return s + ")";
}

std::string sample_string(const std::vector<GaussRational> &z) {
    std::string s;
    for (std::size_t k = 0; k < z.size(); ++k) s += (k ? "," : "") + to_string(z[k]);
    return s;
}

json load(const Options &opt, std::string &kind) {
    if (opt.file.empty()) throw InputError({"an input file is required"});
    json doc = load_json_file(opt.file);
    kind = input_kind(doc);
    return doc;
}

json load_kind(const Options &opt, std::initializer_list<const char *> allowed) {
    std::string kind;
    json doc = load(opt, kind);
    for (const char *a : allowed)
        if (kind == a) return doc;
    std::string names;
    for (const char *a : allowed) names += (names.empty() ? "" : " or ") + std::string(a);
    throw InputError({"$: expected a " + names + " input, found " + kind});
}

std::vector<Rational> kaehler_coeffs(const Options &opt, std::size_t r) {
    if (opt.coeffs.empty()) return std::vector<Rational>(r, Rational(1));
    if (opt.coeffs.size() != r)
        throw InputError({"--coeffs: expected " + std::to_string(r) + " values, got " + std::to_string(opt.coeffs.size())});
    std::vector<Rational> out;
    for (const auto &c : opt.coeffs) {
        try {
            out.push_back(parse_rational(c));
        } catch (const std::invalid_argument &e) {
            throw InputError({"--coeffs \"" + c + "\": " + e.what()});
        }
    }
    return out;
}

std::vector<std::vector<GaussRational>> sample_points(const Options &opt, std::size_t r,
                                                      const std::vector<std::vector<GaussRational>> &from_file) {
    std::vector<std::vector<GaussRational>> out;
    for (const auto &s : opt.samples) {
        out.push_back(parse_sample(s));
        if (out.back().size() != r)
            throw InputError({"--samples \"" + s + "\": expected " + std::to_string(r) + " coordinates"});
    }
    if (!out.empty()) return out;
    if (!from_file.empty()) return from_file;
    return default_orbit_samples(r);
}

json coeffs_json(const std::vector<Rational> &c) {
    json out = json::array();
    for (const auto &x : c) out.push_back(to_json(x));
    return out;
}

// Sum of the operators; a cone element of the nilpotent orbit.
NilpotentOperator cone_element(const std::vector<NilpotentOperator> &ns, std::size_t dim) {
    QiMatrix sum(dim, dim);
    for (const auto &n : ns) sum += n.matrix();
    return NilpotentOperator(sum);
}

Report pmhs_report(const PmhsInput &in) {
    Report r;
    IncreasingFiltration w = in.w;
    DecreasingFiltration f = in.f;
    if (in.bigrading) {
        try {
            MixedHodgeData mhs = mhs_from_bigrading(*in.bigrading);
            for (const auto &f : mhs.report.items())
                if (f.check_id.rfind("congruence", 0) == 0) r.add({"bigrading." + f.check_id, f.status, f.witness});
            w = mhs.weight;
            f = mhs.hodge;
        } catch (const std::invalid_argument &e) {
            r.fail("bigrading", e.what());
            return r;
        }
    }
    NilpotentOperator n;
    try {
        n = cone_element(in.nilpotents, in.ambient_dim);
    } catch (const std::invalid_argument &e) {
        r.fail("cone_element", e.what());
        return r;
    }
    try {
        r.merge(check_pmhs(w, f, in.form, n, in.weight));
    } catch (const std::invalid_argument &e) {
        r.fail("form", e.what());
    }
    return r;
}

DecreasingFiltration pmhs_hodge_filtration(const PmhsInput &in) {
    if (in.bigrading) return mhs_from_bigrading(*in.bigrading).hodge;
    return in.f;
}

} // namespace

RunReport make_run_report(std::string command, const Report &r, json result) {
    RunReport out;
    out.command = std::move(command);
    out.items = r.items();
    out.result = std::move(result);
    out.verdict = !r.passed() ? Status::fail : r.has_caveat() ? Status::caveat : Status::pass;
    return out;
}

json to_json(const RunReport &r, bool with_timing) {
    json items = json::array();
    for (const auto &f : r.items)
        items.push_back({{"check_id", f.check_id}, {"status", to_string(f.status)}, {"witness", f.witness}});
    json out = {{"command", r.command}, {"verdict", to_string(r.verdict)}, {"items", items}, {"result", r.result}};
    if (with_timing) out["timing_ms"] = r.timing_ms;
    return out;
}

std::string render_text(const RunReport &r, bool with_timing) {
    std::size_t width = 8;
    for (const auto &f : r.items) width = std::max(width, f.check_id.size());
    std::string out;
    for (const auto &f : r.items) {
        std::string status = to_string(f.status);
        for (auto &c : status) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        std::string line = status + std::string(7 - status.size(), ' ') + f.check_id;
        if (!f.witness.empty()) line += std::string(width + 2 - f.check_id.size(), ' ') + f.witness;
        out += line + "\n";
    }
    out += "verdict: " + std::string(to_string(r.verdict)) + "\n";
    if (with_timing) {
        std::ostringstream os;
        os << std::fixed << std::setprecision(3) << r.timing_ms;
        out += "time: " + os.str() + " ms\n";
    }
    return out;
}

RunReport cmd_dual(const Options &opt) {
    LatticePolytope p = parse_polytope(load_kind(opt, {"polytope"}));
    if (!p.origin_in_interior()) throw InputError({"$.vertices: the origin is not in the interior of the polytope"});
    LatticePolytope d = polar_dual(p);
    Report r;
    r.pass("origin_interior");
    const bool reflexive = p.is_integral() && d.is_integral();
    if (reflexive) r.pass("reflexive");
    else if (!p.is_integral()) r.caveat("reflexive", "input has non-integral vertices");
    else r.caveat("reflexive", "dual has non-integral vertices");
    json verts = json::array();
    for (const auto &v : sorted_vertices(d)) verts.push_back(to_json(v));
    json result = {{"dual", {{"dim", d.dim()}, {"vertices", verts}}}, {"reflexive", reflexive}, {"integral", d.is_integral()}};
    return make_run_report("dual", r, result);
}

RunReport cmd_hlc(const Options &opt) {
    LatticePolytope p = parse_polytope(load_kind(opt, {"polytope"}));
    if (!is_reflexive(p)) throw InputError({"$.vertices: the polytope is not reflexive"});
    HlcVerdict v = hlc_verdict(p);
    Report r;
    r.pass("reflexive");
    json cands = json::array();
    for (const auto &c : v.candidates) {
        std::string w = "face_dim=" + std::to_string(c.face.face_dim) + " sector_dim=" + std::to_string(c.sector_dim) +
                        " orbit_closure_dim=" + std::to_string(c.orbit_closure_dim) + " age=" + to_string(c.age);
        const std::string id = "candidate" + point_string(c.lattice_point);
        if (c.face.face_dim == 1) r.pass(id, w);
        else r.fail(id, w + " (partner age " + std::to_string(c.face.face_dim) + ")");
        cands.push_back({{"point", to_json(c.lattice_point)},
                         {"face_dim", c.face.face_dim},
                         {"face_vertices", c.face.vertex_subset},
                         {"orbit_closure_dim", c.orbit_closure_dim},
                         {"sector_dim", c.sector_dim},
                         {"age", to_json(c.age)}});
    }
    if (v.verdict == HlcVerdictKind::holds_with_caveat) r.caveat("candidates", v.caveat);
    json witnesses = json::array();
    for (const auto &c : v.witnesses) witnesses.push_back(to_json(c.lattice_point));
    json result = {{"verdict", to_string(v.verdict)}, {"candidates", cands}, {"witnesses", witnesses}};
    if (!v.caveat.empty()) result["caveat"] = v.caveat;
    return make_run_report("hlc", r, result);
}

RunReport cmd_check_hs(const Options &opt) {
    HodgeInput in = parse_hodge_structure(load_kind(opt, {"hodge_structure"}));
    Report r = validate_hodge_structure(in.hodge);
    json numbers = json::array();
    for (const auto &[pq, s] : in.hodge.pieces())
        numbers.push_back({{"p", pq.first}, {"q", pq.second}, {"h", s.dim()}});
    if (in.form) {
        if (!r.passed()) {
            r.caveat("polarization", "skipped: not a Hodge structure");
        } else {
            try {
                r.merge(check_polarization(in.hodge, *in.form), "polarization.");
            } catch (const std::invalid_argument &e) {
                r.fail("polarization.form", e.what());
            }
        }
    }
    return make_run_report("check-hs", r, {{"weight", in.hodge.weight()}, {"hodge_numbers", numbers}});
}

RunReport cmd_check_pmhs(const Options &opt) {
    std::string kind;
    json doc = load(opt, kind);
    if (kind == "pmhs") {
        PmhsInput in = parse_pmhs(doc);
        return make_run_report("check-pmhs", pmhs_report(in), {{"weight", in.weight}});
    }
    if (kind != "orbifold") throw InputError({"$: expected a pmhs or orbifold input, found " + kind});
    OrbifoldData o = parse_orbifold(doc);
    auto coeffs = kaehler_coeffs(opt, o.kaehler_basis_size);
    return make_run_report("check-pmhs", check_theorem_5_2(o, coeffs), {{"weight", o.n}, {"coeffs", coeffs_json(coeffs)}});
}

RunReport cmd_check_orbifold(const Options &opt) {
    OrbifoldData o = parse_orbifold(load_kind(opt, {"orbifold"}));
    auto coeffs = kaehler_coeffs(opt, o.kaehler_basis_size);
    Report r;
    Report valid = validate_orbifold(o);
    r.merge(valid, "valid.");
    r.merge(validate_dims(o));
    r.merge(hlc_check(o));
    json result = {{"n", o.n}, {"coeffs", coeffs_json(coeffs)}};
    OrbifoldCohomology h = assemble_orbifold_cohomology(o);
    json dims = json::array();
    for (const auto &b : h.grading.blocks()) dims.push_back({{"degree", to_json(b.degree)}, {"dim", b.dim}});
    result["orbifold_betti"] = dims;
    if (!valid.passed()) {
        r.caveat("theorems", "skipped: sector data failed validation");
        return make_run_report("check-orbifold", r, result);
    }
    r.merge(orbifold_hard_lefschetz(o, coeffs), "orbifold.");
    r.merge(check_theorem_5_1(o, coeffs), "pure.");
    r.merge(check_theorem_5_2(o, coeffs), "mixed.");
    if (h.bigrading) {
        json hn = json::array();
        for (const auto &[pq, s] : h.bigrading->pieces())
            if (!s.is_zero()) hn.push_back({{"p", pq.first}, {"q", pq.second}, {"h", s.dim()}});
        result["orbifold_hodge_numbers"] = hn;
    }
    return make_run_report("check-orbifold", r, result);
}

RunReport cmd_orbit(const Options &opt) {
    std::string kind;
    json doc = load(opt, kind);
    json result;
    Report r;
    if (kind == "pmhs") {
        PmhsInput in = parse_pmhs(doc);
        auto samples = sample_points(opt, in.nilpotents.size(), in.samples);
        DecreasingFiltration f;
        try {
            f = pmhs_hodge_filtration(in);
        } catch (const std::invalid_argument &e) {
            r.fail("bigrading", e.what());
            return make_run_report("orbit", r);
        }
        OrbitPoint pt;
        pt.operators = in.nilpotents;
        json used = json::array();
        for (const auto &z : samples) {
            pt.coefficients = z;
            used.push_back(sample_string(z));
            try {
                r.merge(check_orbit_polarized_at(f, pt, in.weight, in.form), "sample[" + sample_string(z) + "].");
            } catch (const std::invalid_argument &e) {
                r.fail("sample[" + sample_string(z) + "]", e.what());
            }
        }
        result = {{"samples", used}};
    } else if (kind == "orbifold") {
        OrbifoldData o = parse_orbifold(doc);
        auto samples = sample_points(opt, o.kaehler_basis_size, {});
        json used = json::array();
        for (const auto &z : samples) used.push_back(sample_string(z));
        r = orbit_check_corollary_5_3(o, samples);
        result = {{"samples", used}};
    } else {
        throw InputError({"$: expected a pmhs or orbifold input, found " + kind});
    }
    return make_run_report("orbit", r, result);
}

RunReport cmd_age(const Options &opt) {
    if (opt.order < 1) throw InputError({"--order: must be positive"});
    GroupElementAction g{static_cast<unsigned>(opt.order), {}};
    for (long m : opt.exponents) {
        if (m < 0 || m >= opt.order)
            throw InputError({"--exponents: " + std::to_string(m) + " is outside [0, " + std::to_string(opt.order) + ")"});
        g.exponents.push_back(static_cast<unsigned>(m));
    }
    Report r;
    Rational a = age(g);
    return make_run_report("age", r, {{"age", to_string(a)}, {"sl", is_sl(g)}});
}

int run_command(const std::string &command, const Options &opt, std::ostream &out, std::ostream &err) {
    static const std::map<std::string, std::function<RunReport(const Options &)>> table{
        {"dual", cmd_dual},           {"hlc", cmd_hlc},     {"check-hs", cmd_check_hs},
        {"check-pmhs", cmd_check_pmhs}, {"check-orbifold", cmd_check_orbifold},
        {"orbit", cmd_orbit},         {"age", cmd_age}};
    auto it = table.find(command);
    if (it == table.end()) {
        err << "error: unknown command " << command << "\n";
        return exit_invalid_input;
    }
    RunReport rep;
    auto start = std::chrono::steady_clock::now();
    try {
        rep = it->second(opt);
    } catch (const InputError &e) {
        if (opt.json) {
            out << json{{"command", command}, {"verdict", "invalid_input"}, {"errors", e.items()}}.dump(2) << "\n";
        }
        for (const auto &item : e.items()) err << "error: " << item << "\n";
        return exit_invalid_input;
    }
    rep.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (opt.json) {
        out << to_json(rep, opt.timing).dump(2) << "\n";
    } else if (command == "age") {
        out << rep.result["age"].get<std::string>() << ", SL: " << (rep.result["sl"].get<bool>() ? "true" : "false") << "\n";
    } else {
        if (command == "dual") {
            out << "dual vertices:\n";
            for (const auto &v : rep.result["dual"]["vertices"]) {
                RationalVector x;
                for (const auto &c : v) x.push_back(c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()));
                out << "  " << point_string(x) << "\n";
            }
            out << "reflexive: " << (rep.result["reflexive"].get<bool>() ? "true" : "false") << "\n";
        } else if (command == "hlc") {
            out << "hlc: " << rep.result["verdict"].get<std::string>() << "\n";
            if (rep.result.contains("caveat")) out << "note: " << rep.result["caveat"].get<std::string>() << "\n";
        }
        out << render_text(rep, opt.timing);
    }
    return rep.verdict == Status::fail ? exit_check_failed : exit_pass;
}

} // namespace orbhodge::cli
