#include "hautus/analyzer.hpp"
#include "hautus/poly_text.hpp"

#include "json.hpp"

#include <sstream>

namespace hautus {

namespace {

using nlohmann::json;

json poly_list(const std::vector<Poly>& ps) {
    json a = json::array();
    for (const Poly& p : ps) a.push_back(poly_to_string(p));
    return a;
}

json point_json(const std::optional<std::vector<Rational>>& pt) {
    if (!pt) return nullptr;
    json a = json::array();
    for (const Rational& c : *pt) a.push_back(rational_to_string(c));
    return a;
}

json answer_json(const PointAnswer& a) {
    return {{"status", point_status_name(a.status)},
            {"point", point_json(a.point)},
            {"certificate", a.certificate},
            {"effort", a.effort}};
}

json verdict_json(const Verdict& v) {
    json factors = json::array();
    for (const VerdictFactor& f : v.factors) {
        json jf = {{"factor", poly_to_string(f.factor)}, {"multiplicity", f.multiplicity}};
        jf["points"] = f.points ? answer_json(*f.points) : json(nullptr);
        factors.push_back(std::move(jf));
    }
    json jv = {{"space", signal_space_name(v.space)},
               {"status", verdict_status_name(v.status)},
               {"factors", std::move(factors)},
               {"notes", v.notes}};
    jv["cancellation_dimension"] =
        v.cancellation_dimension ? json(*v.cancellation_dimension) : json(nullptr);
    return jv;
}

std::string point_text(const std::vector<Rational>& pt) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < pt.size(); ++i) os << (i ? ", " : "") << rational_to_string(pt[i]);
    os << ")";
    return os.str();
}

std::string vector_text(const std::vector<Poly>& ps) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < ps.size(); ++i) os << (i ? ", " : "") << poly_to_string(ps[i]);
    os << ")";
    return os.str();
}

} // namespace

std::string report_to_json(const Report& rep) {
    json j;
    j["schema"] = "hautus-report/1";

    json entries = json::array();
    for (int i = 0; i < rep.system.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < rep.system.cols(); ++c)
            row.push_back(poly_to_string(rep.system.at(i, c)));
        entries.push_back(std::move(row));
    }
    j["system"] = {{"rows", rep.system.rows()},
                   {"cols", rep.system.cols()},
                   {"nvars", rep.system.nvars()},
                   {"entries", std::move(entries)}};

    j["class"] = system_class_name(rep.shape.kind);
    j["rank"] = rep.shape.symbolic_rank;
    j["rank_deficient"] = rep.shape.rank_deficient;

    j["cancellation_ideal"] = {{"defined", rep.cancellation.has_value()},
                               {"generators", rep.cancellation
                                                  ? poly_list(rep.cancellation->generators)
                                                  : json::array()}};
    j["characteristic_ideal"] = {{"generators", poly_list(rep.characteristic.generators)}};
    j["cancellation_dimension"] =
        rep.cancellation_dimension ? json(*rep.cancellation_dimension) : json(nullptr);

    json verdicts = json::array();
    for (const Verdict& v : rep.verdicts) verdicts.push_back(verdict_json(v));
    j["verdicts"] = std::move(verdicts);

    json factors = json::array();
    for (const UncontrollableFactor& f : rep.factors)
        factors.push_back({{"factor", poly_to_string(f.factor)},
                           {"multiplicity", f.multiplicity},
                           {"irreducible", f.irreducible}});
    j["factors"] = std::move(factors);

    json witnesses = json::array();
    for (const TorsionWitness& w : rep.witnesses) {
        json cert = json::array();
        for (const Poly& b : w.certificate) cert.push_back(poly_to_string(b));
        witnesses.push_back({{"factor", poly_to_string(w.prime_factor)},
                             {"witness", poly_list(w.witness.components)},
                             {"certificate", std::move(cert)}});
    }
    j["witnesses"] = std::move(witnesses);

    json surjective = json::array();
    for (int c : rep.coordinates.surjective) surjective.push_back(c + 1); // 1-based like d1..dn
    j["coordinates"] = {{"coordinate_controllable", rep.coordinates.controllable},
                        {"surjective_coordinates", std::move(surjective)},
                        {"notes", rep.coordinates.notes}};

    j["fitting"] = rep.fitting ? json{{"rank", rep.fitting->rank},
                                      {"generators", poly_list(rep.fitting->generators)},
                                      {"dimension", rep.fitting->dimension}}
                               : json(nullptr);
    j["diagnostics"] = rep.diagnostics;
    j["elapsed_seconds"] = rep.elapsed_seconds;
    return j.dump(2) + "\n";
}

std::string report_to_text(const Report& rep) {
    std::ostringstream os;
    os << "system: " << rep.system.rows() << " x " << rep.system.cols()
       << ", vars: " << rep.system.nvars() << ", class: " << system_class_name(rep.shape.kind)
       << ", rank: " << rep.shape.symbolic_rank
       << (rep.shape.rank_deficient ? " (rank-deficient)" : "") << "\n";
    os << "matrix:\n";
    for (int i = 0; i < rep.system.rows(); ++i) {
        os << "  [";
        for (int c = 0; c < rep.system.cols(); ++c)
            os << (c ? "; " : "") << poly_to_string(rep.system.at(i, c));
        os << "]\n";
    }

    os << "cancellation ideal: ";
    if (!rep.cancellation)
        os << "undefined (rows > cols)\n";
    else if (rep.cancellation->is_zero_ideal())
        os << "0\n";
    else {
        os << "generated by";
        for (const Poly& g : rep.cancellation->generators) os << " " << poly_to_string(g) << ";";
        os << "\n";
    }
    os << "characteristic ideal: ";
    if (rep.characteristic.is_zero_ideal())
        os << "0\n";
    else {
        os << "generated by";
        for (const Poly& g : rep.characteristic.generators) os << " " << poly_to_string(g) << ";";
        os << "\n";
    }
    if (rep.cancellation_dimension)
        os << "cancellation dimension: " << *rep.cancellation_dimension << "\n";

    for (const Verdict& v : rep.verdicts) {
        os << "verdict [" << signal_space_name(v.space)
           << "]: " << verdict_status_name(v.status);
        if (v.cancellation_dimension) os << " (dimension " << *v.cancellation_dimension << ")";
        os << "\n";
        for (const VerdictFactor& f : v.factors) {
            os << "  factor " << poly_to_string(f.factor) << " (multiplicity "
               << f.multiplicity << ")";
            if (f.points) {
                os << ": points " << point_status_name(f.points->status);
                if (!f.points->certificate.empty())
                    os << ", certificate " << f.points->certificate;
                if (!f.points->effort.empty()) os << ", search " << f.points->effort;
                if (f.points->point) os << ", at " << point_text(*f.points->point);
            }
            os << "\n";
        }
        for (const std::string& note : v.notes) os << "  note: " << note << "\n";
    }

    if (!rep.factors.empty()) {
        os << "uncontrollable factors:\n";
        for (const UncontrollableFactor& f : rep.factors)
            os << "  " << poly_to_string(f.factor) << " (multiplicity " << f.multiplicity
               << (f.irreducible ? ", irreducible" : ", square-free") << ")\n";
    }
    for (const TorsionWitness& w : rep.witnesses) {
        os << "torsion witness for " << poly_to_string(w.prime_factor) << ":\n";
        os << "  x = " << vector_text(w.witness.components) << "\n";
        os << "  combination: " << poly_to_string(w.prime_factor) << " * x = "
           << vector_text(w.certificate) << " . rows\n";
    }

    os << "coordinates: "
       << (rep.coordinates.controllable ? "coordinate-controllable" : "not coordinate-controllable");
    if (!rep.coordinates.surjective.empty()) {
        os << "; surjective:";
        for (int c : rep.coordinates.surjective) os << " " << c + 1;
    }
    os << "\n";
    for (const std::string& note : rep.coordinates.notes) os << "  note: " << note << "\n";

    if (rep.fitting) {
        os << "first nonzero minor ideal (size " << rep.fitting->rank << "): generated by";
        for (const Poly& g : rep.fitting->generators) os << " " << poly_to_string(g) << ";";
        os << " dimension " << rep.fitting->dimension << "\n";
    }
    if (!rep.diagnostics.empty()) {
        os << "diagnostics:\n";
        for (const std::string& d : rep.diagnostics) os << "  - " << d << "\n";
    }
    os << "elapsed: " << rep.elapsed_seconds << " s\n";
    return os.str();
}

} // namespace hautus
