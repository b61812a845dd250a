#include "rp3link/construction.hpp"

#include <algorithm>

namespace rp3link {

namespace {

using Edges = std::vector<std::pair<std::string, std::string>>;

void add_complete(Edges& edges, const std::vector<std::string>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            edges.emplace_back(verts[i], verts[j]);
}

Construction build_single(const std::string& desc) {
    Construction c;
    c.descriptor = desc;
    if (desc.size() >= 2 && desc[0] == 'k' &&
        std::all_of(desc.begin() + 1, desc.end(), [](char ch) { return std::isdigit(ch); })) {
        int n = std::stoi(desc.substr(1));
        c.graph = Graph::complete(n);
        std::vector<int> ids(n);
        for (int i = 0; i < n; ++i) ids[i] = i;
        c.parts.push_back({desc, ids});
        return c;
    }
    if (desc == "k6-c6-k6") {
        std::vector<std::string> verts{"1", "2", "3", "4", "5", "6",
                                       "A", "B", "C", "D", "E", "F"};
        Edges edges;
        add_complete(edges, {"1", "2", "3", "4", "5", "6"});
        add_complete(edges, {"A", "B", "C", "D", "E", "F"});
        for (auto [a, b] : std::initializer_list<std::pair<const char*, const char*>>{
                 {"4", "A"}, {"4", "C"}, {"5", "A"}, {"5", "B"}, {"6", "B"}, {"6", "C"}})
            edges.emplace_back(a, b);
        c.graph = Graph(verts, edges);
        std::vector<int> ids(12);
        for (int i = 0; i < 12; ++i) ids[i] = i;
        c.parts.push_back({desc, ids});
        return c;
    }
    if (desc == "k7-e-k7") {
        std::vector<std::string> verts{"1", "2", "3", "4", "5", "6",
                                       "7", "A", "B", "C", "D", "E"};
        Edges edges;
        add_complete(edges, {"1", "2", "3", "4", "5", "6", "7"});
        // second K7 shares the edge (6,7)
        std::vector<std::string> second{"6", "7", "A", "B", "C", "D", "E"};
        for (std::size_t i = 0; i < second.size(); ++i)
            for (std::size_t j = i + 1; j < second.size(); ++j)
                if (!(second[i] == "6" && second[j] == "7"))
                    edges.emplace_back(second[i], second[j]);
        c.graph = Graph(verts, edges);
        std::vector<int> ids(12);
        for (int i = 0; i < 12; ++i) ids[i] = i;
        c.parts.push_back({desc, ids});
        return c;
    }
    throw parse_error("unknown construction descriptor: " + desc);
}

}  // namespace

Construction build_construction(const std::string& descriptor) {
    if (descriptor.rfind("union:", 0) == 0) {
        std::string rest = descriptor.substr(6);
        std::vector<std::string> subs;
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            std::size_t comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            std::string item = rest.substr(pos, comma - pos);
            if (item.empty()) throw parse_error("empty union member in: " + descriptor);
            if (item.rfind("union:", 0) == 0)
                throw parse_error("nested union descriptors are not supported");
            subs.push_back(item);
            pos = comma + 1;
        }
        Construction out;
        out.descriptor = descriptor;
        std::vector<std::string> labels;
        Edges edges;
        for (std::size_t k = 0; k < subs.size(); ++k) {
            Construction part = build_single(subs[k]);
            std::string prefix = std::to_string(k + 1) + ":";
            int base = static_cast<int>(labels.size());
            for (const auto& l : part.graph.labels()) labels.push_back(prefix + l);
            for (const auto& [a, b] : part.graph.edges())
                edges.emplace_back(prefix + part.graph.label(a), prefix + part.graph.label(b));
            std::vector<int> ids(part.graph.vertex_count());
            for (int i = 0; i < part.graph.vertex_count(); ++i) ids[i] = base + i;
            out.parts.push_back({subs[k], ids});
        }
        out.graph = Graph(labels, edges);
        return out;
    }
    return build_single(descriptor);
}

bool spatially_triple_linked_kind(const std::string& kind) {
    if (kind == "k6-c6-k6" || kind == "k7-e-k7") return true;
    if (kind.size() >= 2 && kind[0] == 'k' &&
        std::all_of(kind.begin() + 1, kind.end(), [](char ch) { return std::isdigit(ch); }))
        return std::stoi(kind.substr(1)) >= 10;
    return false;
}

}  // namespace rp3link
