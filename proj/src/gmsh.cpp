#include "lbie/mesh.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace lbie {

Eigen::Matrix2Xd gmsh_triangle_nodes(int geom_order)
{
    Eigen::Matrix2Xd uv;
    switch (geom_order) {
    case 1:
        uv.resize(2, 3);
        uv << 0, 1, 0,
              0, 0, 1;
        break;
    case 2:
        uv.resize(2, 6);
        uv << 0, 1, 0, 0.5, 0.5, 0,
              0, 0, 1, 0, 0.5, 0.5;
        break;
    case 3:
        uv.resize(2, 10);
        uv << 0, 1, 0, 1. / 3, 2. / 3, 2. / 3, 1. / 3, 0, 0, 1. / 3,
              0, 0, 1, 0, 0, 1. / 3, 2. / 3, 2. / 3, 1. / 3, 1. / 3;
        break;
    case 4:
        uv.resize(2, 15);
        uv << 0, 1, 0, 0.25, 0.5, 0.75, 0.75, 0.5, 0.25, 0, 0, 0, 0.25, 0.5, 0.25,
              0, 0, 1, 0, 0, 0, 0.25, 0.5, 0.75, 0.75, 0.5, 0.25, 0.25, 0.25, 0.5;
        break;
    default:
        throw ContractError("gmsh_triangle_nodes: geometric order must be 1..4");
    }
    return uv;
}

namespace {

int triangle_order(int type)
{
    switch (type) {
    case 2: return 1;
    case 9: return 2;
    case 21: return 3;
    case 23: return 4;
    default: return 0;
    }
}

int triangle_type(int order)
{
    constexpr int types[] = {0, 2, 9, 21, 23};
    return types[order];
}

void expect(std::istream& in, const std::string& token, const std::string& path)
{
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line == token) return;
        throw FormatError(path + ": expected " + token + ", found '" + line + "'");
    }
    throw FormatError(path + ": unexpected end of file, expected " + token);
}

}  // namespace

SurfaceMesh load_gmsh(const std::string& path, int p, const GmshOptions& options, GmshReport* report)
{
    std::ifstream in(path);
    if (!in) throw FormatError(path + ": cannot open file");
    GmshReport local;
    GmshReport& rep = report ? *report : local;
    rep = GmshReport{};

    std::unordered_map<long, Vector3d> nodes;
    struct Element {
        long id;
        int order;
        std::vector<long> nodes;
    };
    std::vector<Element> elements;
    bool have_format = false;

    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line == "$MeshFormat") {
            std::getline(in, line);
            std::istringstream ls(line);
            std::string version;
            int file_type = -1, data_size = 0;
            ls >> version >> file_type >> data_size;
            if (version.rfind("2.2", 0) != 0)
                throw FormatError(path + ": unsupported MSH version " + version + " (need 2.2)");
            if (file_type != 0) throw FormatError(path + ": binary MSH files are not supported");
            expect(in, "$EndMeshFormat", path);
            have_format = true;
        } else if (line == "$Nodes") {
            if (!have_format) throw FormatError(path + ": $Nodes before $MeshFormat");
            long count = 0;
            in >> count;
            for (long i = 0; i < count; ++i) {
                long id;
                Vector3d x;
                if (!(in >> id >> x[0] >> x[1] >> x[2])) throw FormatError(path + ": truncated $Nodes");
                nodes[id] = x;
            }
            in >> std::ws;
            expect(in, "$EndNodes", path);
        } else if (line == "$Elements") {
            if (!have_format) throw FormatError(path + ": $Elements before $MeshFormat");
            long count = 0;
            in >> count;
            std::getline(in, line);
            for (long i = 0; i < count; ++i) {
                if (!std::getline(in, line)) throw FormatError(path + ": truncated $Elements");
                std::istringstream ls(line);
                long id;
                int type, ntags;
                ls >> id >> type >> ntags;
                for (int t = 0; t < ntags; ++t) {
                    long tag;
                    ls >> tag;
                }
                const int order = triangle_order(type);
                if (order == 0) {
                    ++rep.skipped_elements;
                    continue;
                }
                Element e{id, order, {}};
                long n;
                while (ls >> n) e.nodes.push_back(n);
                if (static_cast<int>(e.nodes.size()) != n_pol(order))
                    throw FormatError(path + ": element " + std::to_string(id) + " has " +
                                      std::to_string(e.nodes.size()) + " nodes, expected " +
                                      std::to_string(n_pol(order)));
                elements.push_back(std::move(e));
            }
            expect(in, "$EndElements", path);
        } else if (line.size() > 1 && line[0] == '$') {
            // skip unknown section
            const std::string end = "$End" + line.substr(1);
            while (std::getline(in, line)) {
                if (!line.empty() && line.back() == '\r') line.pop_back();
                if (line == end) break;
            }
        } else {
            throw FormatError(path + ": unexpected line '" + line + "'");
        }
    }
    if (!have_format) throw FormatError(path + ": missing $MeshFormat");
    if (elements.empty()) throw FormatError(path + ": no triangle elements");

    auto fit_all = [&](bool flip) {
        std::vector<TriangleChart> charts;
        charts.reserve(elements.size());
        for (const Element& e : elements) {
            Eigen::Matrix2Xd uv = gmsh_triangle_nodes(e.order);
            if (flip) uv.row(0).swap(uv.row(1));
            Matrix3Xd images(3, e.nodes.size());
            for (size_t k = 0; k < e.nodes.size(); ++k) {
                const auto it = nodes.find(e.nodes[k]);
                if (it == nodes.end())
                    throw FormatError(path + ": element " + std::to_string(e.id) +
                                      " references missing node " + std::to_string(e.nodes[k]));
                images.col(k) = it->second;
            }
            double residual = 0.0;
            charts.push_back(TriangleChart::fit(uv, images, e.order, &residual));
            double scale = 0.0;
            for (Index k = 1; k < images.cols(); ++k)
                scale = std::max(scale, (images.col(k) - images.col(0)).norm());
            if (!flip && residual > 1e-6 * scale)
                rep.warnings.push_back("element " + std::to_string(e.id) + ": fit residual " +
                                       std::to_string(residual));
        }
        return charts;
    };

    rep.triangles = static_cast<int>(elements.size());
    auto ref = build_reference_element(p);
    SurfaceMesh mesh(fit_all(false), ref, path);
    if (options.orient_outward) {
        double volume = 0.0;
        for (Index k = 0; k < mesh.n_pts(); ++k)
            volume += mesh.weights()[k] * mesh.positions().col(k).dot(mesh.normals().col(k)) / 3.0;
        if (volume < 0) return SurfaceMesh(fit_all(true), ref, path);
    }
    return mesh;
}

void write_gmsh(const std::string& path, const SurfaceMesh& mesh, int geom_order)
{
    const Eigen::Matrix2Xd uv = gmsh_triangle_nodes(geom_order);
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw FormatError(path + ": cannot open for writing");
    const long per = uv.cols();
    std::fprintf(f, "$MeshFormat\n2.2 0 8\n$EndMeshFormat\n$Nodes\n%ld\n", per * mesh.n_tri());
    long id = 1;
    for (const TriangleChart& chart : mesh.charts()) {
        for (long k = 0; k < per; ++k, ++id) {
            const Vector3d x = chart.point(uv(0, k), uv(1, k));
            std::fprintf(f, "%ld %.17g %.17g %.17g\n", id, x[0], x[1], x[2]);
        }
    }
    std::fprintf(f, "$EndNodes\n$Elements\n%d\n", mesh.n_tri());
    for (int t = 0; t < mesh.n_tri(); ++t) {
        std::fprintf(f, "%d %d 2 0 1", t + 1, triangle_type(geom_order));
        for (long k = 0; k < per; ++k) std::fprintf(f, " %ld", t * per + k + 1);
        std::fprintf(f, "\n");
    }
    std::fprintf(f, "$EndElements\n");
    std::fclose(f);
}

}  // namespace lbie
