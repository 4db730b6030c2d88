#include "prismlab/json_io.hpp"

#include "prismlab/errors.hpp"

#include <map>

namespace prismlab {

Json cell_to_json(const Cell& cell)
{
    return Json{{"parts", cell.parts()}};
}

SignedCell cell_from_json(const Json& j)
{
    try {
        const auto parts = j.at("parts").get<std::vector<std::vector<Vertex>>>();
        return canonicalize(parts);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("cell: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("cell: ") + e.what());
    }
}

Json chain_to_json(const Chain& chain)
{
    Json terms = Json::array();
    for (const auto& [cell, coef] : chain.terms())
        terms.push_back(Json{{"cell", cell_to_json(cell)}, {"coef", coef}});
    return Json{{"dim", chain.dimension()}, {"terms", terms}};
}

Chain chain_from_json(const Json& j)
{
    try {
        Chain chain(j.at("dim").get<int>());
        for (const auto& term : j.at("terms")) {
            const SignedCell sc = cell_from_json(term.at("cell"));
            chain.add(sc.cell, sc.sign * term.at("coef").get<std::int64_t>());
        }
        return chain;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("chain: ") + e.what());
    } catch (const DimensionError& e) {
        throw ParseError(std::string("chain: ") + e.what());
    }
}

Json generic_to_json(const GenericPrismComplex& complex)
{
    Json tops = Json::array();
    for (const auto& t : complex.tops)
        tops.push_back(Json{{"id", t.id}, {"factors", t.factors}});
    Json faces = Json::array();
    for (const auto& f : complex.faces) {
        Json cofaces = Json::array();
        for (const auto& c : f.cofaces)
            cofaces.push_back(
                Json{{"top", complex.tops[c.top].id}, {"induced_sign_if_plus", c.induced_sign_if_plus}});
        faces.push_back(Json{{"id", f.id}, {"cofaces", cofaces}});
    }
    return Json{{"top_cells", tops}, {"codim1", faces}};
}

GenericPrismComplex generic_from_json(const Json& j)
{
    GenericPrismComplex out;
    try {
        std::map<std::string, std::size_t> index;
        for (const auto& t : j.at("top_cells")) {
            GenericPrismComplex::TopCell top{t.at("id").get<std::string>(),
                                             t.at("factors").get<std::vector<int>>()};
            if (!index.emplace(top.id, out.tops.size()).second)
                throw ParseError("duplicate top cell id \"" + top.id + "\"");
            out.tops.push_back(std::move(top));
        }
        for (const auto& f : j.at("codim1")) {
            GenericPrismComplex::Face face;
            face.id = f.at("id").get<std::string>();
            for (const auto& c : f.at("cofaces")) {
                const auto top_id = c.at("top").get<std::string>();
                const auto it = index.find(top_id);
                if (it == index.end())
                    throw ParseError("codim-1 cell \"" + face.id + "\" refers to unknown top \"" +
                                     top_id + "\"");
                face.cofaces.push_back({it->second, c.at("induced_sign_if_plus").get<int>()});
            }
            out.faces.push_back(std::move(face));
        }
    } catch (const Json::exception& e) {
        throw ParseError(std::string("generic prism complex: ") + e.what());
    }
    out.validate();
    return out;
}

Json orbit_report_to_json(int dim, const std::vector<Orbit>& orbits)
{
    Json list = Json::array();
    for (const auto& o : orbits)
        list.push_back(Json{{"rep", cell_to_json(o.representative)}, {"size", o.size()}});
    return Json{{"dim", dim}, {"orbits", list}};
}

Json coherence_to_json(const CoherenceReport& report, bool include_faces)
{
    Json j{{"pass", report.pass}, {"violations", report.violations}, {"faces_checked", report.faces.size()}};
    if (include_faces) {
        Json faces = Json::array();
        for (const auto& f : report.faces)
            faces.push_back(Json{{"face", f.face}, {"parents", f.parents}, {"signs", f.signs}});
        j["faces"] = faces;
    }
    return j;
}

Json homology_to_json(const std::vector<HomologyGroup>& groups)
{
    Json list = Json::array();
    for (const auto& h : groups) {
        Json torsion = Json::array();
        for (const auto& t : h.torsion)
            torsion.push_back(t.str());
        list.push_back(Json{{"dim", h.dimension}, {"free_rank", h.free_rank}, {"torsion", torsion}});
    }
    return list;
}

Json certificate_to_json(const PartitionCertificate& certificate)
{
    Json witness = Json::array();
    for (const auto& c : certificate.witness)
        witness.push_back(to_string(c));
    Json weights = Json::array();
    for (const auto& part : certificate.weights) {
        Json w = Json::array();
        for (const auto& v : part)
            w.push_back(to_string(v));
        weights.push_back(w);
    }
    return Json{{"parts", certificate.parts}, {"witness", witness}, {"weights", weights}};
}

} // namespace prismlab
