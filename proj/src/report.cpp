#include "isostrat/report.hpp"

#include "isostrat/errors.hpp"

#include <algorithm>
#include <sstream>

namespace isostrat {

namespace {

std::string text_vector(const Vector& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? ", " : "") + to_string(v[i]);
    return out + ")";
}

std::string text_matrix(const Matrix& m)
{
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r)
        out += (r ? ", " : "") + text_vector(m.row_vector(r));
    return out + "]";
}

std::string text_element(const Representation& rep, std::size_t e)
{
    if (rep.kind() != RepresentationKind::Permutation)
        return text_matrix(rep.group().element(e));
    return element_json(rep, e).dump();
}

std::string text_list(const std::vector<std::size_t>& ids)
{
    if (ids.empty())
        return "-";
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i)
        out += (i ? ", " : "") + std::to_string(ids[i]);
    return out;
}

const SubgroupEntry& require_subgroup(const Session& s, const CommandOptions& o, const std::string& command)
{
    if (!o.subgroup)
        throw InputError(command + " needs --subgroup NAME");
    return s.subgroup(*o.subgroup);
}

Vector parse_point(const Session& s, const CommandOptions& o, const std::string& command)
{
    if (!o.point)
        throw InputError(command + " needs --point v1,v2,...");
    Vector v;
    std::stringstream in(*o.point);
    std::string item;
    while (std::getline(in, item, ','))
        v.push_back(parse_scalar(item));
    if (v.size() != s.rep.dimension())
        throw DimensionMismatch("--point has " + std::to_string(v.size()) + " coordinates, V has dimension "
                                + std::to_string(s.rep.dimension()));
    return v;
}

/// A small generating set of a subgroup, chosen greedily by element index.
std::vector<std::size_t> generating_elements(const FiniteMatrixGroup& g, const Subgroup& h)
{
    std::vector<std::size_t> gens;
    std::vector<std::size_t> reached{0};
    for (auto e : h.elements()) {
        if (std::binary_search(reached.begin(), reached.end(), e))
            continue;
        gens.push_back(e);
        reached = g.generated(gens);
    }
    return gens;
}

std::vector<Vector> fixed_basis(const Session& s, const SubgroupEntry& entry)
{
    if (entry.basis)
        return *entry.basis;
    return fixed_locus(s.rep, entry.spec).basis();
}

Json basis_polynomials(const Session& s, const std::vector<Vector>& basis)
{
    Json out = Json::array();
    for (const auto& b : basis)
        out.push_back(to_string(s.rep.harmonic()->polynomial(b)));
    return out;
}

Report invariants_command(const Session& s, const CommandOptions& o)
{
    const auto& rep = s.rep;
    const unsigned top = o.max_degree.value_or(4);
    Report r{"invariants", Json::object(), {}, 0};
    std::ostringstream text;
    r.data["command"] = "invariants";
    r.data["group_order"] = rep.group().order();
    r.data["dimension"] = rep.dimension();
    auto molien = molien_dims(rep, top);
    r.data["molien"] = molien;
    text << "group order " << rep.group().order() << ", dim V = " << rep.dimension() << "\n";
    text << "Molien coefficients 0.." << top << ":";
    for (auto m : molien)
        text << " " << m;
    text << "\n";

    Json degrees = Json::array();
    for (unsigned d = 0; d <= top; ++d) {
        auto basis = invariant_basis(rep, d);
        Json polys = Json::array();
        text << "degree " << d << ": dimension " << basis.basis.size() << "\n";
        for (const auto& p : basis.basis) {
            polys.push_back(to_string(p));
            text << "  " << to_string(p) << "\n";
        }
        degrees.push_back(Json{{"degree", d}, {"dimension", basis.basis.size()}, {"basis", polys}});
    }
    r.data["degrees"] = degrees;

    auto gens = minimal_generators(rep, std::nullopt, s.options.generator_degree_cap);
    Json list = Json::array();
    text << "minimal generators up to degree " << gens.bound
         << (gens.complete ? " (Noether bound reached)" : " (degree cap below the Noether bound)") << ":\n";
    for (std::size_t k = 0; k < gens.generators.size(); ++k) {
        std::string name = "J" + std::to_string(k + 1);
        list.push_back(Json{{"name", name}, {"degree", gens.degrees[k]}, {"polynomial", to_string(gens.generators[k])}});
        text << "  " << name << " (degree " << gens.degrees[k] << ") = " << to_string(gens.generators[k]) << "\n";
    }
    Json certificate = Json::array();
    for (const auto& c : gens.certificate)
        certificate.push_back(Json{{"degree", c.degree},
                                   {"invariant_dim", c.invariant_dim},
                                   {"decomposable_dim", c.decomposable_dim},
                                   {"new_generators", c.new_generators}});
    r.data["generators"] = Json{{"bound", gens.bound}, {"complete", gens.complete}, {"list", list},
                                {"certificate", certificate}};
    r.text = text.str();
    return r;
}

Report strata_command(const Session& s, const CommandOptions& o)
{
    const auto& rep = s.rep;
    auto strat = isotropy_classes(rep);
    std::size_t principal = principal_isotropy(rep, strat);
    Report r{"strata", Json::object(), {}, 0};
    std::ostringstream text;
    r.data["command"] = "strata";
    r.data["group_order"] = rep.group().order();
    r.data["principal"] = principal;
    Json classes = Json::array();
    text << strat.classes.size() << " isotropy classes (principal: " << principal << ")\n";
    for (const auto& c : strat.classes) {
        Json gens = Json::array();
        std::string gtext;
        for (auto e : generating_elements(rep.group(), c.representative)) {
            gens.push_back(element_json(rep, e));
            gtext += (gtext.empty() ? "" : ", ") + text_element(rep, e);
        }
        classes.push_back(Json{{"id", c.id},
                               {"order", c.representative.order()},
                               {"fixed_dim", c.fixed.dimension()},
                               {"witness", vector_json(c.witness)},
                               {"covers", c.covers},
                               {"conjugates", strat.lattice.classes[c.subgroup_class].members.size()},
                               {"generators", gens}});
        text << "class " << c.id << ": order " << c.representative.order() << ", dim V^H = "
             << c.fixed.dimension() << ", witness " << text_vector(c.witness) << ", covers "
             << text_list(c.covers) << "\n";
        text << "  generated by " << (gtext.empty() ? "the identity" : gtext) << "\n";
    }
    r.data["classes"] = classes;
    if (o.point) {
        Vector v = parse_point(s, o, "strata");
        std::size_t id = stratum_membership(rep, strat, v);
        r.data["point"] = Json{{"vector", vector_json(v)}, {"class", id}};
        text << "point " << text_vector(v) << " lies in the stratum of class " << id << "\n";
    }
    r.text = text.str();
    return r;
}

Report fixed_locus_command(const Session& s, const CommandOptions& o)
{
    const auto& entry = require_subgroup(s, o, "fixed-locus");
    auto basis = fixed_basis(s, entry);
    Report r{"fixed-locus", Json::object(), {}, 0};
    std::ostringstream text;
    r.data["command"] = "fixed-locus";
    r.data["subgroup"] = entry.label;
    r.data["dimension"] = basis.size();
    r.data["coordinates"] = entry.coordinates;
    Json jb = Json::array();
    for (const auto& b : basis)
        jb.push_back(vector_json(b));
    r.data["basis"] = jb;
    text << "V^" << entry.label << " has dimension " << basis.size() << "\n";
    for (std::size_t i = 0; i < basis.size(); ++i)
        text << "  " << entry.coordinates[i] << ": " << text_vector(basis[i]) << "\n";
    if (s.rep.harmonic()) {
        r.data["polynomials"] = basis_polynomials(s, basis);
        for (std::size_t i = 0; i < basis.size(); ++i)
            text << "  " << entry.coordinates[i] << " = " << to_string(s.rep.harmonic()->polynomial(basis[i])) << "\n";
    }
    if (entry.finite) {
        Scalar chi = character_dimension(s.rep, *entry.finite);
        r.data["subgroup_order"] = entry.finite->order();
        r.data["character_dimension"] = to_string(chi);
        text << "subgroup order " << entry.finite->order() << ", character formula gives " << to_string(chi) << "\n";
    }
    r.text = text.str();
    return r;
}

Report monodromy_command(const Session& s, const CommandOptions& o)
{
    const auto& entry = require_subgroup(s, o, "monodromy");
    if (!entry.finite)
        throw InputError("monodromy needs a subgroup without Lie generators");
    auto mono = monodromy_rep(s.rep, *entry.finite, entry.basis);
    Report r{"monodromy", Json::object(), {}, 0};
    std::ostringstream text;
    r.data["command"] = "monodromy";
    r.data["subgroup"] = entry.label;
    r.data["subgroup_order"] = entry.finite->order();
    r.data["normalizer_order"] = mono.gamma.numerator.order();
    r.data["gamma_order"] = mono.gamma.order();
    r.data["abelian"] = mono.gamma.is_abelian();
    r.data["faithful"] = mono.faithful;
    Json jb = Json::array();
    for (const auto& b : mono.basis)
        jb.push_back(vector_json(b));
    r.data["basis"] = jb;
    Json mats = Json::array();
    for (const auto& m : mono.matrices)
        mats.push_back(matrix_json(m));
    r.data["matrices"] = mats;
    text << "N(" << entry.label << ") has order " << mono.gamma.numerator.order() << "; Gamma = N/H has order "
         << mono.gamma.order() << (mono.gamma.is_abelian() ? " (abelian)" : " (nonabelian)") << ", action "
         << (mono.faithful ? "faithful" : "not faithful") << "\n";
    text << "matrices in the basis of V^H:\n";
    for (const auto& m : mono.matrices)
        text << "  " << text_matrix(m) << "\n";
    r.text = text.str();
    return r;
}

Report rationalize_command(const Session& s, const CommandOptions& o)
{
    const auto& rep = s.rep;
    const auto& entry = require_subgroup(s, o, "rationalize");
    if (!o.target)
        throw InputError("rationalize needs --target POLY");
    auto basis = fixed_basis(s, entry);
    if (basis.empty())
        throw InputError("V^" + entry.label + " is zero; there is nothing to rationalize");

    std::vector<std::string> names = s.invariant_names;
    std::vector<Poly> invariants = s.invariants;
    std::string source = "session";
    if (invariants.empty()) {
        if (rep.has_lie())
            throw InputError("invariants of a representation with a Lie action must be listed in the session");
        auto gens = minimal_generators(rep, std::nullopt, s.options.generator_degree_cap);
        invariants = gens.generators;
        for (std::size_t k = 0; k < invariants.size(); ++k)
            names.push_back("J" + std::to_string(k + 1));
        source = "computed";
    }
    for (std::size_t k = 0; k < invariants.size(); ++k) {
        auto check = verify_invariant(rep, invariants[k]);
        if (!check.invariant)
            throw ValidationError("session invariant '" + names[k] + "' is not invariant");
    }

    // The target may be written in the V^H coordinates or in the variables
    // of V, in which case it is restricted.
    Poly target;
    try {
        target = parse_poly(*o.target, entry.coordinates);
    } catch (const ParseError&) {
        try {
            target = restrict_to_subspace(parse_poly(*o.target, rep.variables()), basis, entry.coordinates);
        } catch (const ParseError& e) {
            throw ParseError("--target: not a polynomial in the coordinates of V^" + entry.label
                             + " or in the variables of V: " + e.what());
        }
    }

    auto j = restrict_invariants(names, invariants, basis, entry.coordinates);
    auto symmetries = subspace_symmetries(rep, basis);
    unsigned cap = o.max_degree.value_or(s.options.rationalize_cap);
    auto e = rationalize(target, j, symmetries, cap);

    Poly a = evaluate_on_subspace(e.numerator, j);
    Poly b = evaluate_on_subspace(e.denominator, j);
    Poly lhs = target * b;
    bool verified = lhs == a;

    Report r{"rationalize", Json::object(), {}, 0};
    std::ostringstream text;
    r.data["command"] = "rationalize";
    r.data["subgroup"] = entry.label;
    r.data["coordinates"] = entry.coordinates;
    Json jb = Json::array();
    for (const auto& v : basis)
        jb.push_back(vector_json(v));
    r.data["basis"] = jb;
    r.data["target"] = to_string(target);
    r.data["invariants_source"] = source;
    Json inv = Json::array();
    for (std::size_t k = 0; k < j.size(); ++k)
        inv.push_back(Json{{"name", j.names[k]},
                           {"degree", j.degrees[k]},
                           {"polynomial", to_string(invariants[k])},
                           {"restricted", to_string(j.restricted[k])}});
    r.data["invariants"] = inv;
    r.data["expression"] = to_string(e);
    r.data["numerator"] = to_string(e.numerator);
    r.data["denominator"] = to_string(e.denominator);
    r.data["identity"] = Json{{"statement", "(" + to_string(target) + ") * (" + to_string(e.denominator)
                                                + ") = " + to_string(e.numerator)},
                              {"lhs", to_string(lhs)},
                              {"rhs", to_string(a)},
                              {"verified", verified}};
    r.data["witness"] = vector_json(e.witness);
    r.data["denominator_at_witness"] = to_string(e.denominator_at_witness);
    r.data["bound"] = e.bound;
    r.data["cap"] = cap;

    text << "on V^" << entry.label << " with coordinates";
    for (const auto& c : entry.coordinates)
        text << " " << c;
    text << ":\n";
    for (std::size_t k = 0; k < j.size(); ++k)
        text << "  " << j.names[k] << " restricts to " << to_string(j.restricted[k]) << "\n";
    text << to_string(target) << " = " << to_string(e) << "\n";
    text << "identity on V^" << entry.label << ": " << to_string(lhs) << " = " << to_string(a)
         << (verified ? " (verified)" : " (FAILED)") << "\n";
    text << "denominator at " << text_vector(e.witness) << " is " << to_string(e.denominator_at_witness) << "\n";
    text << "weighted degree bound " << e.bound << " (cap " << cap << ")\n";
    r.text = text.str();
    if (!verified)
        throw Error("internal: rationalize returned an expression that fails its identity");
    return r;
}

Report slice_command(const Session& s, const CommandOptions& o)
{
    const auto& rep = s.rep;
    Vector v = parse_point(s, o, "slice");
    auto sl = orthogonal_slice(rep, v);
    Report r{"slice", Json::object(), {}, 0};
    std::ostringstream text;
    r.data["command"] = "slice";
    r.data["point"] = vector_json(v);
    r.data["stabilizer_order"] = stabilizer(rep, v).order();
    if (rep.has_lie())
        r.data["lie_stabilizer_dim"] = lie_stabilizer_algebra(rep, v).dimension();
    r.data["tangent_dim"] = sl.tangent.dimension();
    r.data["slice_dim"] = sl.slice.dimension();
    Json tb = Json::array(), sb = Json::array();
    for (const auto& b : sl.tangent.basis())
        tb.push_back(vector_json(b));
    for (const auto& b : sl.slice.basis())
        sb.push_back(vector_json(b));
    r.data["tangent_basis"] = tb;
    r.data["slice_basis"] = sb;
    text << "point " << text_vector(v) << ": finite stabilizer of order " << stabilizer(rep, v).order() << "\n";
    if (rep.has_lie())
        text << "Lie stabilizer dimension " << lie_stabilizer_algebra(rep, v).dimension() << "\n";
    text << "tangent space dimension " << sl.tangent.dimension() << ", slice dimension " << sl.slice.dimension()
         << "\n";
    for (const auto& b : sl.slice.basis())
        text << "  " << text_vector(b) << "\n";
    r.text = text.str();
    return r;
}

Report verify_command(const Session& s, const CommandOptions& o)
{
    const auto& rep = s.rep;
    std::vector<std::string> names;
    std::vector<Poly> polys;
    if (o.target) {
        names.push_back("target");
        polys.push_back(parse_poly(*o.target, rep.variables()));
    } else {
        names = s.invariant_names;
        polys = s.invariants;
        if (polys.empty())
            throw InputError("verify needs --target POLY or invariants in the session");
    }
    Report r{"verify", Json::object(), {}, 0};
    std::ostringstream text;
    r.data["command"] = "verify";
    Json results = Json::array();
    bool all = true;
    for (std::size_t k = 0; k < polys.size(); ++k) {
        auto check = verify_invariant(rep, polys[k]);
        Json item{{"name", names[k]}, {"polynomial", to_string(polys[k])}, {"invariant", check.invariant}};
        text << names[k] << ": ";
        if (check.invariant) {
            text << "invariant\n";
        } else {
            all = false;
            if (check.failing_element) {
                item["failing_element"] = element_json(rep, *check.failing_element);
                text << "not invariant under " << text_element(rep, *check.failing_element) << "\n";
            } else {
                item["failing_lie_generator"] = *check.failing_lie_generator;
                text << "not annihilated by " << *check.failing_lie_generator << "\n";
            }
        }
        results.push_back(item);
    }
    r.data["results"] = results;
    r.data["all_invariant"] = all;
    r.exit_code = all ? 0 : 2;
    r.text = text.str();
    return r;
}

std::string error_type(const Error& e)
{
#define ISOSTRAT_ERROR_TYPE(T)                                                                     \
    if (dynamic_cast<const T*>(&e))                                                                \
        return #T;
    ISOSTRAT_ERROR_TYPE(ParseError)
    ISOSTRAT_ERROR_TYPE(DimensionMismatch)
    ISOSTRAT_ERROR_TYPE(GroupNotFiniteWithinCap)
    ISOSTRAT_ERROR_TYPE(NonInvertibleGenerator)
    ISOSTRAT_ERROR_TYPE(NotASubgroup)
    ISOSTRAT_ERROR_TYPE(NotNormal)
    ISOSTRAT_ERROR_TYPE(NoLieAction)
    ISOSTRAT_ERROR_TYPE(CapExceeded)
    ISOSTRAT_ERROR_TYPE(ValidationError)
    ISOSTRAT_ERROR_TYPE(TargetNotMonodromyInvariant)
    ISOSTRAT_ERROR_TYPE(NoSolutionWithinBound)
    ISOSTRAT_ERROR_TYPE(NotAnIsotropyClass)
    ISOSTRAT_ERROR_TYPE(InputError)
    ISOSTRAT_ERROR_TYPE(MathOutcome)
#undef ISOSTRAT_ERROR_TYPE
    return "Error";
}

} // namespace

Report run_command(const Session& session, const std::string& command, const CommandOptions& options)
{
    if (command == "invariants")
        return invariants_command(session, options);
    if (command == "strata")
        return strata_command(session, options);
    if (command == "fixed-locus")
        return fixed_locus_command(session, options);
    if (command == "monodromy")
        return monodromy_command(session, options);
    if (command == "rationalize")
        return rationalize_command(session, options);
    if (command == "slice")
        return slice_command(session, options);
    if (command == "verify")
        return verify_command(session, options);
    throw InputError("unknown command '" + command + "'");
}

Report error_report(const std::string& command, const Error& error)
{
    Report r{command, Json::object(), {}, 0};
    bool math = dynamic_cast<const MathOutcome*>(&error) != nullptr;
    bool input = dynamic_cast<const InputError*>(&error) != nullptr;
    r.exit_code = math ? 2 : input ? 1 : 3;
    r.data["command"] = command;
    r.data["error"] = Json{{"type", error_type(error)}, {"message", error.what()}};
    r.text = "error (" + error_type(error) + "): " + error.what() + "\n";
    return r;
}

std::string emit_report(const Report& report, ReportFormat format)
{
    if (format == ReportFormat::Json)
        return report.data.dump(2) + "\n";
    return report.text;
}

} // namespace isostrat
