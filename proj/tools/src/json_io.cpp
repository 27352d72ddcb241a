#include "orbhodge_cli/json_io.hpp"

#include <fstream>
#include <sstream>

namespace orbhodge::cli {

namespace {

std::string join_items(const std::vector<std::string> &items) {
    std::string out;
    for (const auto &s : items) out += (out.empty() ? "" : "\n") + s;
    return out;
}

class Reader {
public:
    std::vector<std::string> errors;

    void error(const std::string &path, const std::string &msg) { errors.push_back(path + ": " + msg); }

    void finish() const {
        if (!errors.empty()) throw InputError(errors);
    }

    const json *field(const json &obj, const std::string &key, const std::string &path, bool required = true) {
        if (!obj.is_object()) {
            error(path, "expected an object");
            return nullptr;
        }
        auto it = obj.find(key);
        if (it == obj.end()) {
            if (required) error(path + "." + key, "missing");
            return nullptr;
        }
        return &*it;
    }

    const json *array(const json &obj, const std::string &key, const std::string &path, bool required = true) {
        const json *a = field(obj, key, path, required);
        if (a && !a->is_array()) {
            error(path + "." + key, "expected an array");
            return nullptr;
        }
        return a;
    }

    std::optional<long> integer(const json &v, const std::string &path) {
        if (v.is_number_integer()) return v.get<long>();
        if (v.is_string()) {
            try {
                if (auto k = as_integer(parse_rational(v.get<std::string>()))) return k;
            } catch (const std::invalid_argument &) {
            }
        }
        error(path, "expected an integer");
        return std::nullopt;
    }

    std::optional<long> integer_field(const json &obj, const std::string &key, const std::string &path) {
        const json *v = field(obj, key, path);
        return v ? integer(*v, path + "." + key) : std::nullopt;
    }

    std::optional<Rational> rational(const json &v, const std::string &path) {
        if (v.is_number_integer()) return Rational(v.get<long>());
        if (v.is_string()) {
            try {
                return parse_rational(v.get<std::string>());
            } catch (const std::invalid_argument &e) {
                error(path, e.what());
                return std::nullopt;
            }
        }
        error(path, "expected a rational (integer or \"p/q\" string)");
        return std::nullopt;
    }

    std::optional<GaussRational> gauss(const json &v, const std::string &path) {
        if (v.is_object()) {
            const json *re = field(v, "re", path, false);
            const json *im = field(v, "im", path, false);
            if (!re && !im) {
                error(path, "expected {\"re\", \"im\"}");
                return std::nullopt;
            }
            auto r = re ? rational(*re, path + ".re") : Rational(0);
            auto i = im ? rational(*im, path + ".im") : Rational(0);
            if (!r || !i) return std::nullopt;
            return GaussRational(*r, *i);
        }
        if (v.is_string()) {
            try {
                return parse_gauss(v.get<std::string>());
            } catch (const std::invalid_argument &e) {
                error(path, e.what());
                return std::nullopt;
            }
        }
        if (v.is_number_integer()) return GaussRational(Rational(v.get<long>()));
        error(path, "expected a number (integer, string or {\"re\", \"im\"})");
        return std::nullopt;
    }

    /// Nested row arrays. An empty array is accepted for any shape with no
    /// entries.
    std::optional<QiMatrix> matrix(const json &v, const std::string &path, std::optional<std::size_t> rows = {},
                                   std::optional<std::size_t> cols = {}) {
        if (!v.is_array()) {
            error(path, "expected a matrix (array of rows)");
            return std::nullopt;
        }
        if (v.empty()) {
            if (rows && cols && *rows != 0 && *cols != 0) {
                error(path, "expected a " + std::to_string(*rows) + "x" + std::to_string(*cols) + " matrix");
                return std::nullopt;
            }
            return QiMatrix(rows.value_or(0), cols.value_or(0));
        }
        const std::size_t r = v.size();
        if (rows && *rows != r) {
            error(path, "expected " + std::to_string(*rows) + " rows, found " + std::to_string(r));
            return std::nullopt;
        }
        if (!v[0].is_array()) {
            error(path + "[0]", "expected a row array");
            return std::nullopt;
        }
        const std::size_t c = v[0].size();
        if (cols && *cols != c) {
            error(path, "expected " + std::to_string(*cols) + " columns, found " + std::to_string(c));
            return std::nullopt;
        }
        QiMatrix m(r, c);
        bool ok = true;
        for (std::size_t i = 0; i < r; ++i) {
            const std::string rp = path + "[" + std::to_string(i) + "]";
            if (!v[i].is_array() || v[i].size() != c) {
                error(rp, "expected a row of length " + std::to_string(c));
                ok = false;
                continue;
            }
            for (std::size_t j = 0; j < c; ++j) {
                auto z = gauss(v[i][j], rp + "[" + std::to_string(j) + "]");
                if (z) m(i, j) = *z;
                else ok = false;
            }
        }
        if (!ok) return std::nullopt;
        return m;
    }

    /// Column span of a basis matrix with `ambient` rows.
    std::optional<Subspace> subspace(const json &v, const std::string &path, std::size_t ambient) {
        if (v.is_array() && v.empty()) return Subspace(ambient);
        auto m = matrix(v, path, ambient);
        if (!m) return std::nullopt;
        return Subspace::span(*m);
    }

    std::optional<std::map<Bidegree, Subspace>> pieces(const json &arr, const std::string &path, std::size_t ambient) {
        std::map<Bidegree, Subspace> out;
        bool ok = true;
        for (std::size_t k = 0; k < arr.size(); ++k) {
            const std::string pp = path + "[" + std::to_string(k) + "]";
            auto p = integer_field(arr[k], "p", pp);
            auto q = integer_field(arr[k], "q", pp);
            const json *b = field(arr[k], "basis", pp);
            auto s = b ? subspace(*b, pp + ".basis", ambient) : std::nullopt;
            if (!p || !q || !s) {
                ok = false;
                continue;
            }
            Bidegree key{static_cast<int>(*p), static_cast<int>(*q)};
            if (out.count(key)) {
                error(pp, "duplicate piece " + to_string(key));
                ok = false;
                continue;
            }
            out.emplace(key, std::move(*s));
        }
        if (!ok) return std::nullopt;
        return out;
    }

    std::optional<BilinearFormData> form(const json &v, const std::string &path, std::size_t ambient) {
        const json *g = field(v, "gram", path);
        auto sign = integer_field(v, "symmetry_sign", path);
        auto m = g ? matrix(*g, path + ".gram", ambient, ambient) : std::nullopt;
        if (!m || !sign) return std::nullopt;
        if (*sign != 1 && *sign != -1) {
            error(path + ".symmetry_sign", "must be 1 or -1");
            return std::nullopt;
        }
        try {
            return BilinearFormData(*m, static_cast<int>(*sign));
        } catch (const std::exception &e) {
            error(path, e.what());
            return std::nullopt;
        }
    }

    std::optional<std::vector<Subspace>> filtration_steps(const json &v, const std::string &path, std::size_t ambient,
                                                          int &first) {
        auto f = integer_field(v, "first", path);
        const json *steps = array(v, "steps", path);
        if (!f || !steps) return std::nullopt;
        first = static_cast<int>(*f);
        std::vector<Subspace> out;
        bool ok = true;
        for (std::size_t k = 0; k < steps->size(); ++k) {
            auto s = subspace((*steps)[k], path + ".steps[" + std::to_string(k) + "]", ambient);
            if (s) out.push_back(std::move(*s));
            else ok = false;
        }
        if (!ok) return std::nullopt;
        return out;
    }

    std::optional<std::vector<GaussRational>> sample(const json &v, const std::string &path) {
        if (!v.is_array()) {
            error(path, "expected an array of coordinates");
            return std::nullopt;
        }
        std::vector<GaussRational> out;
        for (std::size_t k = 0; k < v.size(); ++k) {
            auto z = gauss(v[k], path + "[" + std::to_string(k) + "]");
            if (!z) return std::nullopt;
            out.push_back(*z);
        }
        return out;
    }
};

std::size_t to_size(long v) { return v < 0 ? 0 : static_cast<std::size_t>(v); }

// Adapted-basis pieces for one degree: h^{p,p} as a coordinate block;
// for p > q, H^{p,q} spanned by e_a + i e_b and H^{q,p} by e_a - i e_b.
std::map<Bidegree, Subspace> adapted_pieces(int j, const std::vector<long> &h, std::size_t ambient) {
    std::map<Bidegree, Subspace> out;
    std::size_t offset = 0;
    for (int p = j; 2 * p >= j; --p) {
        const int q = j - p;
        const std::size_t count = to_size(h[static_cast<std::size_t>(p)]);
        if (count == 0) continue;
        if (p == q) {
            out.emplace(Bidegree{p, q}, Subspace::coordinate(ambient, offset, count));
            offset += count;
            continue;
        }
        QiMatrix hol(ambient, count), anti(ambient, count);
        for (std::size_t c = 0; c < count; ++c) {
            hol(offset + c, c) = 1;
            hol(offset + count + c, c) = GaussRational::imaginary_unit();
            anti(offset + c, c) = 1;
            anti(offset + count + c, c) = -GaussRational::imaginary_unit();
        }
        out.emplace(Bidegree{p, q}, Subspace::span(hol));
        out.emplace(Bidegree{q, p}, Subspace::span(anti));
        offset += 2 * count;
    }
    return out;
}

std::optional<SectorData> parse_sector(Reader &rd, const json &s, const std::string &path, std::size_t r) {
    SectorData out;
    const std::size_t before = rd.errors.size();
    if (const json *id = rd.field(s, "id", path)) {
        if (id->is_string()) out.id = id->get<std::string>();
        else rd.error(path + ".id", "expected a string");
    }
    if (const json *a = rd.field(s, "age", path))
        if (auto q = rd.rational(*a, path + ".age")) out.age = *q;
    if (const json *p = rd.field(s, "partner", path, false)) {
        if (p->is_string()) out.partner = p->get<std::string>();
        else rd.error(path + ".partner", "expected a string");
    } else {
        out.partner = out.id;
    }
    if (const json *u = rd.field(s, "untwisted", path, false)) {
        if (u->is_boolean()) out.untwisted = u->get<bool>();
        else rd.error(path + ".untwisted", "expected a boolean");
    }
    auto d = rd.integer_field(s, "dim", path);
    if (!d) return std::nullopt;
    if (*d < 0) {
        rd.error(path + ".dim", "must be nonnegative");
        return std::nullopt;
    }
    out.dim = static_cast<int>(*d);
    const int top = 2 * out.dim;

    const json *hn = rd.field(s, "hodge_numbers", path, false);
    const json *coh = rd.field(s, "cohomology", path, false);
    if ((hn == nullptr) == (coh == nullptr)) {
        rd.error(path, "exactly one of hodge_numbers and cohomology is required");
        return std::nullopt;
    }
    const std::string cpath = path + (hn ? ".hodge_numbers" : ".cohomology");
    const json &degrees = hn ? *hn : *coh;
    if (!degrees.is_array() || degrees.size() != static_cast<std::size_t>(top + 1)) {
        rd.error(cpath, "expected an array of " + std::to_string(top + 1) + " degrees");
        return std::nullopt;
    }
    for (int j = 0; j <= top; ++j) {
        const json &dj = degrees[static_cast<std::size_t>(j)];
        const std::string jp = cpath + "[" + std::to_string(j) + "]";
        try {
            if (hn) {
                if (!dj.is_array() || dj.size() != static_cast<std::size_t>(j + 1)) {
                    rd.error(jp, "expected h^{p," + std::to_string(j) + "-p} for p = 0.." + std::to_string(j));
                    continue;
                }
                std::vector<long> h;
                for (std::size_t p = 0; p < dj.size(); ++p) {
                    auto v = rd.integer(dj[p], jp + "[" + std::to_string(p) + "]");
                    h.push_back(v && *v >= 0 ? *v : 0);
                    if (v && *v < 0) rd.error(jp + "[" + std::to_string(p) + "]", "must be nonnegative");
                }
                for (std::size_t p = 0; p < h.size(); ++p)
                    if (h[p] != h[h.size() - 1 - p]) rd.error(jp, "Hodge numbers must satisfy h^{p,q} = h^{q,p}");
                std::size_t b = 0;
                for (long x : h) b += to_size(x);
                out.cohomology.emplace_back(b, j, adapted_pieces(j, h, b));
            } else {
                auto amb = rd.integer_field(dj, "ambient_dim", jp);
                const json *pcs = rd.array(dj, "pieces", jp);
                if (!amb || !pcs) continue;
                auto pieces = rd.pieces(*pcs, jp + ".pieces", to_size(*amb));
                if (!pieces) continue;
                out.cohomology.emplace_back(to_size(*amb), j, std::move(*pieces));
            }
        } catch (const std::invalid_argument &e) {
            rd.error(jp, e.what());
        }
    }
    if (rd.errors.size() != before) return std::nullopt;

    if (const json *pairing = rd.array(s, "pairing", path)) {
        if (pairing->size() != static_cast<std::size_t>(top + 1)) {
            rd.error(path + ".pairing", "expected " + std::to_string(top + 1) + " matrices");
        } else {
            for (int j = 0; j <= top; ++j) {
                auto m = rd.matrix((*pairing)[static_cast<std::size_t>(j)], path + ".pairing[" + std::to_string(j) + "]",
                                   out.betti(j), out.betti(top - j));
                if (m) out.pairing.push_back(std::move(*m));
            }
        }
    }
    const std::size_t steps = top >= 2 ? static_cast<std::size_t>(top - 1) : 0;
    const json *ka = rd.array(s, "kaehler_actions", path, steps > 0);
    if (ka) {
        if (ka->size() != r) {
            rd.error(path + ".kaehler_actions", "expected " + std::to_string(r) + " actions");
        } else {
            for (std::size_t c = 0; c < r; ++c) {
                const std::string ap = path + ".kaehler_actions[" + std::to_string(c) + "]";
                const json &act = (*ka)[c];
                if (!act.is_array() || act.size() != steps) {
                    rd.error(ap, "expected " + std::to_string(steps) + " degree maps (j = 0.." + std::to_string(top - 2) + ")");
                    continue;
                }
                std::vector<QiMatrix> maps;
                for (std::size_t j = 0; j < steps; ++j) {
                    int jj = static_cast<int>(j);
                    auto m = rd.matrix(act[j], ap + "[" + std::to_string(j) + "]", out.betti(jj + 2), out.betti(jj));
                    if (m) maps.push_back(std::move(*m));
                }
                out.kaehler_actions.push_back(std::move(maps));
            }
        }
    } else if (steps == 0) {
        out.kaehler_actions.assign(r, {});
    }
    if (rd.errors.size() != before) return std::nullopt;
    return out;
}

} // namespace

InputError::InputError(std::vector<std::string> items) : std::runtime_error(join_items(items)), items_(std::move(items)) {}

json load_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw InputError({path + ": cannot open file"});
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw InputError({path + ": " + e.what()});
    }
}

std::string input_kind(const json &doc) {
    if (!doc.is_object()) throw InputError({"$: expected a JSON object"});
    if (auto it = doc.find("kind"); it != doc.end()) {
        if (!it->is_string()) throw InputError({"$.kind: expected a string"});
        std::string k = it->get<std::string>();
        if (k != "polytope" && k != "hodge_structure" && k != "pmhs" && k != "orbifold")
            throw InputError({"$.kind: unknown kind \"" + k + "\""});
        return k;
    }
    if (doc.contains("vertices")) return "polytope";
    if (doc.contains("sectors")) return "orbifold";
    if (doc.contains("nilpotents")) return "pmhs";
    if (doc.contains("pieces")) return "hodge_structure";
    throw InputError({"$: cannot determine the input kind"});
}

LatticePolytope parse_polytope(const json &doc) {
    Reader rd;
    auto n = rd.integer_field(doc, "dim", "$");
    const json *verts = rd.array(doc, "vertices", "$");
    rd.finish();
    if (*n < 1) throw InputError({"$.dim: must be positive"});
    std::vector<RationalVector> vs;
    for (std::size_t k = 0; k < verts->size(); ++k) {
        const std::string vp = "$.vertices[" + std::to_string(k) + "]";
        const json &v = (*verts)[k];
        if (!v.is_array() || v.size() != to_size(*n)) {
            rd.error(vp, "expected " + std::to_string(*n) + " coordinates");
            continue;
        }
        RationalVector x;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (auto q = rd.rational(v[c], vp + "[" + std::to_string(c) + "]")) x.push_back(*q);
        vs.push_back(std::move(x));
    }
    rd.finish();
    try {
        return LatticePolytope(static_cast<int>(*n), std::move(vs));
    } catch (const std::invalid_argument &e) {
        throw InputError({std::string("$.vertices: ") + e.what()});
    }
}

HodgeInput parse_hodge_structure(const json &doc) {
    Reader rd;
    auto amb = rd.integer_field(doc, "ambient_dim", "$");
    auto weight = rd.integer_field(doc, "weight", "$");
    const json *pcs = rd.array(doc, "pieces", "$");
    rd.finish();
    auto pieces = rd.pieces(*pcs, "$.pieces", to_size(*amb));
    std::optional<BilinearFormData> form;
    if (const json *f = rd.field(doc, "form", "$", false)) form = rd.form(*f, "$.form", to_size(*amb));
    rd.finish();
    try {
        return {HodgeStructureData(to_size(*amb), static_cast<int>(*weight), std::move(*pieces)), form};
    } catch (const std::invalid_argument &e) {
        throw InputError({std::string("$.pieces: ") + e.what()});
    }
}

PmhsInput parse_pmhs(const json &doc) {
    Reader rd;
    PmhsInput out;
    auto amb = rd.integer_field(doc, "ambient_dim", "$");
    auto weight = rd.integer_field(doc, "weight", "$");
    rd.finish();
    out.ambient_dim = to_size(*amb);
    out.weight = static_cast<int>(*weight);

    const json *bg = rd.array(doc, "bigrading", "$", false);
    const json *w = rd.field(doc, "W", "$", false);
    const json *f = rd.field(doc, "F", "$", false);
    if (bg && (w || f)) rd.error("$", "give either bigrading or W and F, not both");
    if (bg) {
        if (auto p = rd.pieces(*bg, "$.bigrading", out.ambient_dim)) out.bigrading = Bigrading(out.ambient_dim, std::move(*p));
    } else if (w && f) {
        int wf = 0, ff = 0;
        auto ws = rd.filtration_steps(*w, "$.W", out.ambient_dim, wf);
        auto fs = rd.filtration_steps(*f, "$.F", out.ambient_dim, ff);
        try {
            if (ws) out.w = IncreasingFiltration(out.ambient_dim, wf, std::move(*ws));
        } catch (const std::invalid_argument &e) {
            rd.error("$.W", e.what());
        }
        try {
            if (fs) out.f = DecreasingFiltration(out.ambient_dim, ff, std::move(*fs));
        } catch (const std::invalid_argument &e) {
            rd.error("$.F", e.what());
        }
    } else if (!bg) {
        rd.error("$", "missing bigrading (or W and F)");
    }

    if (const json *fm = rd.field(doc, "form", "$"))
        if (auto q = rd.form(*fm, "$.form", out.ambient_dim)) out.form = std::move(*q);

    if (const json *ns = rd.array(doc, "nilpotents", "$")) {
        if (ns->empty()) rd.error("$.nilpotents", "at least one operator is required");
        for (std::size_t k = 0; k < ns->size(); ++k) {
            const std::string np = "$.nilpotents[" + std::to_string(k) + "]";
            auto m = rd.matrix((*ns)[k], np, out.ambient_dim, out.ambient_dim);
            if (!m) continue;
            try {
                out.nilpotents.emplace_back(*m);
            } catch (const std::invalid_argument &e) {
                rd.error(np, e.what());
            }
        }
    }
    if (const json *ss = rd.array(doc, "samples", "$", false)) {
        for (std::size_t k = 0; k < ss->size(); ++k) {
            const std::string sp = "$.samples[" + std::to_string(k) + "]";
            auto z = rd.sample((*ss)[k], sp);
            if (!z) continue;
            if (z->size() != out.nilpotents.size()) rd.error(sp, "expected one coordinate per nilpotent operator");
            else out.samples.push_back(std::move(*z));
        }
    }
    rd.finish();
    return out;
}

OrbifoldData parse_orbifold(const json &doc) {
    Reader rd;
    OrbifoldData out;
    auto n = rd.integer_field(doc, "n", "$");
    auto r = rd.integer_field(doc, "kaehler_basis_size", "$");
    const json *sectors = rd.array(doc, "sectors", "$");
    rd.finish();
    if (*n < 0) rd.error("$.n", "must be nonnegative");
    if (*r < 0) rd.error("$.kaehler_basis_size", "must be nonnegative");
    rd.finish();
    out.n = static_cast<int>(*n);
    out.kaehler_basis_size = to_size(*r);
    for (std::size_t k = 0; k < sectors->size(); ++k)
        if (auto s = parse_sector(rd, (*sectors)[k], "$.sectors[" + std::to_string(k) + "]", out.kaehler_basis_size))
            out.sectors.push_back(std::move(*s));
    rd.finish();
    for (std::size_t k = 0; k < out.sectors.size(); ++k)
        if (!out.find(out.sectors[k].partner))
            rd.error("$.sectors[" + std::to_string(k) + "].partner", "unknown sector \"" + out.sectors[k].partner + "\"");
    rd.finish();
    try {
        assemble_orbifold_cohomology(out);
    } catch (const std::invalid_argument &e) {
        throw InputError({std::string("$.sectors: ") + e.what()});
    }
    return out;
}

std::vector<GaussRational> parse_sample(const std::string &text) {
    std::vector<GaussRational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_gauss(item));
        } catch (const std::invalid_argument &e) {
            throw InputError({"--samples \"" + text + "\": " + e.what()});
        }
    }
    if (out.empty()) throw InputError({"--samples: empty sample"});
    return out;
}

json to_json(const Rational &q) {
    if (auto k = as_integer(q)) return *k;
    return to_string(q);
}

json to_json(const GaussRational &z) { return to_string(z); }

json to_json(const RationalVector &v) {
    json out = json::array();
    for (const auto &x : v) out.push_back(to_json(x));
    return out;
}

json to_json(const LatticePoint &v) { return json(v); }

} // namespace orbhodge::cli
