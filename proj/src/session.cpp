#include "isostrat/session.hpp"

#include "isostrat/errors.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace isostrat {

namespace {

std::string child(const std::string& path, const std::string& key)
{
    return path.empty() ? key : path + "." + key;
}

std::string child(const std::string& path, std::size_t index)
{
    return path + "[" + std::to_string(index) + "]";
}

[[noreturn]] void fail(const std::string& path, const std::string& message)
{
    throw ParseError((path.empty() ? std::string("session") : path) + ": " + message);
}

const Json& require(const Json& object, const std::string& key, const std::string& path)
{
    auto it = object.find(key);
    if (it == object.end())
        fail(path, "missing required key '" + key + "'");
    return *it;
}

void check_keys(const Json& object, const std::string& path, std::initializer_list<const char*> allowed)
{
    if (!object.is_object())
        fail(path, "expected an object");
    for (const auto& [key, value] : object.items()) {
        bool known = false;
        for (const char* a : allowed)
            known = known || key == a;
        if (!known)
            fail(child(path, key), "unknown key");
    }
}

const Json& require_array(const Json& value, const std::string& path)
{
    if (!value.is_array())
        fail(path, "expected an array");
    return value;
}

std::size_t read_count(const Json& value, const std::string& path)
{
    if (!value.is_number_integer() || value.get<long long>() < 0)
        fail(path, "expected a non-negative integer");
    return value.get<std::size_t>();
}

std::string read_string(const Json& value, const std::string& path)
{
    if (!value.is_string())
        fail(path, "expected a string");
    return value.get<std::string>();
}

bool is_identifier(const std::string& name)
{
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
        return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

std::vector<std::string> read_names(const Json& value, const std::string& path)
{
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < require_array(value, path).size(); ++i) {
        std::string name = read_string(value[i], child(path, i));
        if (!is_identifier(name))
            fail(child(path, i), "'" + name + "' is not a valid symbol name");
        if (!seen.insert(name).second)
            fail(child(path, i), "duplicate name '" + name + "'");
        names.push_back(name);
    }
    return names;
}

Scalar read_scalar(const Json& value, const std::string& path)
{
    if (value.is_number_float())
        fail(path, "floating-point numbers are not accepted; write an exact rational such as \"1/3\"");
    if (value.is_number_integer())
        return Scalar(value.dump());
    if (!value.is_string())
        fail(path, "expected an integer or a rational string");
    try {
        return parse_scalar(value.get<std::string>());
    } catch (const ParseError& e) {
        fail(path, e.what());
    }
}

Vector read_vector(const Json& value, const std::string& path)
{
    Vector v;
    for (std::size_t i = 0; i < require_array(value, path).size(); ++i)
        v.push_back(read_scalar(value[i], child(path, i)));
    return v;
}

Matrix read_matrix(const Json& value, const std::string& path)
{
    require_array(value, path);
    if (value.empty())
        fail(path, "matrix has no rows");
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < value.size(); ++i) {
        rows.push_back(read_vector(value[i], child(path, i)));
        if (rows.back().size() != rows.front().size() || rows.back().empty())
            fail(child(path, i), "rows must be non-empty and of equal length");
    }
    return Matrix::from_rows(rows, rows.front().size());
}

Poly read_poly(const Json& value, const std::vector<std::string>& variables, const std::string& path)
{
    try {
        return parse_poly(read_string(value, path), variables);
    } catch (const ParseError& e) {
        fail(path, e.what());
    }
}

std::vector<std::size_t> read_permutation(const Json& value, const std::string& path)
{
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < require_array(value, path).size(); ++i) {
        if (!value[i].is_number_integer())
            fail(child(path, i), "expected a positive integer");
        long long k = value[i].get<long long>();
        if (k < 1)
            fail(child(path, i), "expected a positive integer");
        perm.push_back(static_cast<std::size_t>(k));
    }
    return perm;
}

/// Re-raises library validation errors with the JSON path in front.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

struct RepresentationInput {
    std::string kind;
    Json canonical;
    std::vector<std::vector<std::size_t>> permutations;
    std::vector<Matrix> generators;
    std::vector<LieGenerator> lie;
    std::optional<Matrix> inner_product;
    std::size_t size = 0;
    unsigned degree = 0;
    bool so3 = false;
};

RepresentationInput read_representation(const Json& value, const std::string& path,
                                        const std::vector<std::string>& variables)
{
    RepresentationInput in;
    check_keys(value, path,
               {"kind", "size", "degree", "generators", "so3_lie", "lie_algebra", "inner_product"});
    in.kind = read_string(require(value, "kind", path), child(path, "kind"));
    in.canonical["kind"] = in.kind;
    const std::string gpath = child(path, "generators");
    const Json& gens = require_array(require(value, "generators", path), gpath);
    if (gens.empty())
        fail(gpath, "at least one generator is required");

    auto forbid = [&](std::initializer_list<const char*> keys) {
        for (const char* k : keys)
            if (value.contains(k))
                fail(child(path, k), "not used by representation kind '" + in.kind + "'");
    };

    if (in.kind == "permutation") {
        forbid({"degree", "so3_lie", "lie_algebra", "inner_product"});
        for (std::size_t i = 0; i < gens.size(); ++i)
            in.permutations.push_back(read_permutation(gens[i], child(gpath, i)));
        in.size = value.contains("size") ? read_count(value["size"], child(path, "size"))
                                         : in.permutations.front().size();
        if (!variables.empty() && variables.size() != in.size)
            fail("variables", "expected " + std::to_string(in.size) + " names");
        for (std::size_t i = 0; i < gens.size(); ++i)
            at_path(child(gpath, i), [&] { return permutation_matrix(in.permutations[i], in.size); });
        in.canonical["size"] = in.size;
        in.canonical["generators"] = in.permutations;
    } else if (in.kind == "matrix") {
        forbid({"size", "degree", "so3_lie"});
        Json canon = Json::array();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            in.generators.push_back(read_matrix(gens[i], child(gpath, i)));
            const Matrix& m = in.generators.back();
            const Matrix& first = in.generators.front();
            if (!m.is_square() || m.rows() != first.rows())
                fail(child(gpath, i), "generators must be square matrices of one size");
            canon.push_back(matrix_json(m));
        }
        const std::size_t n = in.generators.front().rows();
        if (!variables.empty() && variables.size() != n)
            fail("variables", "expected " + std::to_string(n) + " names");
        in.canonical["generators"] = canon;
        if (value.contains("lie_algebra")) {
            const std::string lpath = child(path, "lie_algebra");
            Json lcanon = Json::array();
            for (std::size_t i = 0; i < require_array(value["lie_algebra"], lpath).size(); ++i) {
                const std::string ipath = child(lpath, i);
                check_keys(value["lie_algebra"][i], ipath, {"name", "matrix"});
                std::string name = read_string(require(value["lie_algebra"][i], "name", ipath),
                                               child(ipath, "name"));
                Matrix m = read_matrix(require(value["lie_algebra"][i], "matrix", ipath),
                                       child(ipath, "matrix"));
                if (m.rows() != n || m.cols() != n)
                    fail(child(ipath, "matrix"), "expected a " + std::to_string(n) + "x"
                                                     + std::to_string(n) + " matrix");
                for (const auto& l : in.lie)
                    if (l.name == name)
                        fail(child(ipath, "name"), "duplicate Lie generator '" + name + "'");
                lcanon.push_back(Json{{"name", name}, {"matrix", matrix_json(m)}});
                in.lie.push_back({name, m});
            }
            in.canonical["lie_algebra"] = lcanon;
        }
        if (value.contains("inner_product")) {
            in.inner_product = read_matrix(value["inner_product"], child(path, "inner_product"));
            in.canonical["inner_product"] = matrix_json(*in.inner_product);
        }
    } else if (in.kind == "harmonic") {
        forbid({"size", "lie_algebra", "inner_product"});
        in.degree = static_cast<unsigned>(read_count(require(value, "degree", path), child(path, "degree")));
        if (in.degree > 12)
            fail(child(path, "degree"), "harmonic degree above 12 is not supported");
        Json canon = Json::array();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            in.generators.push_back(read_matrix(gens[i], child(gpath, i)));
            if (in.generators.back().rows() != 3 || in.generators.back().cols() != 3)
                fail(child(gpath, i), "expected a 3x3 matrix");
            canon.push_back(matrix_json(in.generators.back()));
        }
        if (value.contains("so3_lie")) {
            if (!value["so3_lie"].is_boolean())
                fail(child(path, "so3_lie"), "expected true or false");
            in.so3 = value["so3_lie"].get<bool>();
        }
        if (!variables.empty() && variables.size() != 2 * in.degree + 1)
            fail("variables", "expected " + std::to_string(2 * in.degree + 1) + " names");
        in.canonical["degree"] = in.degree;
        in.canonical["generators"] = canon;
        in.canonical["so3_lie"] = in.so3;
    } else {
        fail(child(path, "kind"), "unknown kind '" + in.kind + "' (expected permutation, matrix or harmonic)");
    }
    return in;
}

Representation build_representation(const RepresentationInput& in, std::vector<std::string> variables,
                                    std::size_t cap)
{
    return at_path("representation", [&] {
        if (in.kind == "permutation")
            return permutation_rep(in.permutations, in.size, std::move(variables), cap);
        if (in.kind == "matrix")
            return matrix_rep(in.generators, in.lie, in.inner_product, std::move(variables), cap);
        return harmonic_rep(in.degree, in.generators, in.so3, std::move(variables), cap);
    });
}

/// Source-level matrix of a finite subgroup generator.
Matrix read_source_element(const Representation& rep, const Json& value, const std::string& path)
{
    if (rep.kind() == RepresentationKind::Permutation) {
        auto perm = read_permutation(value, path);
        return at_path(path, [&] { return permutation_matrix(perm, rep.dimension()); });
    }
    Matrix m = read_matrix(value, path);
    std::size_t n = rep.group().dimension();
    if (m.rows() != n || m.cols() != n)
        fail(path, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    return m;
}

SubgroupEntry read_subgroup(const Representation& rep, const Json& value, const std::string& path,
                            Json& canonical)
{
    check_keys(value, path, {"label", "finite_generators", "lie_generators", "basis", "coordinates"});
    SubgroupEntry entry;
    entry.label = read_string(require(value, "label", path), child(path, "label"));
    if (entry.label.empty())
        fail(child(path, "label"), "label must not be empty");
    canonical["label"] = entry.label;

    std::vector<std::size_t> indices;
    Json fcanon = Json::array();
    if (value.contains("finite_generators")) {
        const std::string fpath = child(path, "finite_generators");
        for (std::size_t i = 0; i < require_array(value["finite_generators"], fpath).size(); ++i) {
            Matrix m = read_source_element(rep, value["finite_generators"][i], child(fpath, i));
            auto index = rep.group().index_of(m);
            if (!index)
                throw NotASubgroup(child(fpath, i) + ": element does not belong to the group");
            indices.push_back(*index);
            entry.spec.finite.push_back(rep.action(*index));
            fcanon.push_back(element_json(rep, *index));
        }
    }
    canonical["finite_generators"] = fcanon;

    Json lcanon = Json::array();
    if (value.contains("lie_generators")) {
        const std::string lpath = child(path, "lie_generators");
        for (std::size_t i = 0; i < require_array(value["lie_generators"], lpath).size(); ++i) {
            const Json& item = value["lie_generators"][i];
            const std::string ipath = child(lpath, i);
            if (!rep.has_lie())
                throw NoLieAction(ipath + ": the representation has no Lie algebra action");
            if (item.is_string()) {
                const std::string name = item.get<std::string>();
                entry.spec.lie.push_back(at_path(ipath, [&] { return rep.lie_generator(name).matrix; }));
                lcanon.push_back(name);
                continue;
            }
            Matrix m = read_matrix(item, ipath);
            Matrix on_v;
            if (rep.harmonic()) {
                if (m.rows() != 3 || m.cols() != 3 || !(m + m.transpose()).is_zero())
                    fail(ipath, "expected a skew-symmetric 3x3 matrix or a generator name");
                on_v = rep.harmonic()->derivation(m);
            } else {
                if (m.rows() != rep.dimension() || m.cols() != rep.dimension())
                    fail(ipath, "expected a matrix acting on V or a generator name");
                on_v = m;
            }
            std::vector<Vector> span;
            for (const auto& l : rep.lie())
                span.push_back(l.matrix.entries());
            if (!subspace_contains(row_space_basis(span, on_v.entries().size()), on_v.entries()))
                throw ValidationError(ipath + ": not in the span of the representation's Lie algebra");
            entry.spec.lie.push_back(on_v);
            lcanon.push_back(matrix_json(m));
        }
    }
    canonical["lie_generators"] = lcanon;

    entry.spec.label = entry.label;
    if (entry.spec.lie.empty())
        entry.finite = Subgroup(rep.group(), rep.group().generated(indices));

    LinearSubspace fixed = fixed_locus(rep, entry.spec);
    if (value.contains("basis")) {
        const std::string bpath = child(path, "basis");
        std::vector<Vector> basis;
        Json bcanon = Json::array();
        for (std::size_t i = 0; i < require_array(value["basis"], bpath).size(); ++i) {
            const Json& item = value["basis"][i];
            if (item.is_string() && rep.harmonic()) {
                Poly p = read_poly(item, HarmonicSpace::space_variables(), child(bpath, i));
                basis.push_back(at_path(child(bpath, i), [&] { return rep.harmonic()->coordinates(p); }));
            } else {
                basis.push_back(read_vector(item, child(bpath, i)));
                if (basis.back().size() != rep.dimension())
                    fail(child(bpath, i), "expected " + std::to_string(rep.dimension()) + " coordinates");
            }
            if (!fixed.contains(basis.back()))
                throw ValidationError(child(bpath, i) + ": vector is not fixed by the subgroup");
            bcanon.push_back(vector_json(basis.back()));
        }
        if (basis.size() != fixed.dimension() || span_dimension(basis, rep.dimension()) != basis.size())
            throw ValidationError(bpath + ": not a basis of the fixed subspace (dimension "
                                  + std::to_string(fixed.dimension()) + ")");
        entry.basis = basis;
        canonical["basis"] = bcanon;
    }
    const std::size_t m = entry.basis ? entry.basis->size() : fixed.dimension();
    if (value.contains("coordinates")) {
        entry.coordinates = read_names(value["coordinates"], child(path, "coordinates"));
        if (entry.coordinates.size() != m)
            fail(child(path, "coordinates"), "expected " + std::to_string(m) + " names");
    } else {
        entry.coordinates = numbered_names("s", m);
    }
    canonical["coordinates"] = entry.coordinates;
    return entry;
}

} // namespace

Json vector_json(const Vector& v)
{
    Json out = Json::array();
    for (const auto& s : v)
        out.push_back(to_string(s));
    return out;
}

Json matrix_json(const Matrix& m)
{
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        out.push_back(vector_json(m.row_vector(r)));
    return out;
}

Json element_json(const Representation& rep, std::size_t element)
{
    const Matrix& m = rep.group().element(element);
    if (rep.kind() != RepresentationKind::Permutation)
        return matrix_json(m);
    std::vector<std::size_t> perm(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m(i, j) == 1)
                perm[j] = i + 1;
    return perm;
}

const SubgroupEntry& Session::subgroup(const std::string& label) const
{
    for (const auto& s : subgroups)
        if (s.label == label)
            return s;
    throw InputError("no subgroup labelled '" + label + "' in the session");
}

Session parse_session(std::string_view text)
{
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("session: malformed JSON: ") + e.what());
    }
    check_keys(doc, "", {"variables", "representation", "subgroups", "invariants", "options"});

    SessionOptions options;
    if (doc.contains("options")) {
        const Json& o = doc["options"];
        check_keys(o, "options", {"group_order_cap", "rationalize_cap", "generator_degree_cap", "equation_cap"});
        if (o.contains("group_order_cap"))
            options.group_order_cap = read_count(o["group_order_cap"], "options.group_order_cap");
        if (o.contains("rationalize_cap"))
            options.rationalize_cap = static_cast<unsigned>(read_count(o["rationalize_cap"], "options.rationalize_cap"));
        if (o.contains("generator_degree_cap"))
            options.generator_degree_cap
                = static_cast<unsigned>(read_count(o["generator_degree_cap"], "options.generator_degree_cap"));
        if (o.contains("equation_cap"))
            options.equation_cap = read_count(o["equation_cap"], "options.equation_cap");
    }
    if (const char* env = std::getenv("TOOL_CAP_GROUP_ORDER")) {
        char* end = nullptr;
        long long cap = std::strtoll(env, &end, 10);
        if (*env == '\0' || *end != '\0' || cap < 1)
            throw ParseError("TOOL_CAP_GROUP_ORDER: expected a positive integer, got '" + std::string(env) + "'");
        options.group_order_cap = static_cast<std::size_t>(cap);
    }

    std::vector<std::string> variables;
    if (doc.contains("variables"))
        variables = read_names(doc["variables"], "variables");

    auto input = read_representation(require(doc, "representation", ""), "representation", variables);
    Representation rep = build_representation(input, variables, options.group_order_cap);

    Json canonical;
    canonical["variables"] = rep.variables();
    canonical["representation"] = input.canonical;

    std::vector<SubgroupEntry> subgroups;
    Json scanon = Json::array();
    if (doc.contains("subgroups")) {
        const Json& list = require_array(doc["subgroups"], "subgroups");
        for (std::size_t i = 0; i < list.size(); ++i) {
            Json c;
            subgroups.push_back(read_subgroup(rep, list[i], child("subgroups", i), c));
            for (std::size_t k = 0; k + 1 < subgroups.size(); ++k)
                if (subgroups[k].label == subgroups.back().label)
                    fail(child(child("subgroups", i), "label"), "duplicate label '" + subgroups.back().label + "'");
            scanon.push_back(c);
        }
    }
    canonical["subgroups"] = scanon;

    std::vector<std::string> names;
    std::vector<Poly> invariants;
    Json icanon = Json::object();
    if (doc.contains("invariants")) {
        const Json& inv = doc["invariants"];
        if (!inv.is_object())
            fail("invariants", "expected an object mapping names to polynomials");
        for (const auto& [name, value] : inv.items()) {
            const std::string ipath = child("invariants", name);
            if (!is_identifier(name))
                fail(ipath, "'" + name + "' is not a valid symbol name");
            Poly p = read_poly(value, rep.variables(), ipath);
            if (p.is_zero())
                fail(ipath, "invariants must be nonzero");
            names.push_back(name);
            invariants.push_back(p);
            icanon[name] = to_string(p);
        }
    }
    canonical["invariants"] = icanon;
    canonical["options"] = Json{{"group_order_cap", options.group_order_cap},
                                {"rationalize_cap", options.rationalize_cap},
                                {"generator_degree_cap", options.generator_degree_cap},
                                {"equation_cap", options.equation_cap}};

    return Session{std::move(rep), std::move(subgroups), std::move(names), std::move(invariants),
                   options, std::move(canonical)};
}

Session load_session(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read session file '" + path.string() + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_session(buffer.str());
}

Json serialize_session(const Session& session) { return session.canonical; }

} // namespace isostrat
