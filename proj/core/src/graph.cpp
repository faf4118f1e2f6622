#include "spincrystal/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "spincrystal/crystal.hpp"

namespace spincrystal {

CrystalGraph::CrystalGraph(CartanType ct, int max_n) : ct_(ct), max_n_(max_n) {
    if (max_n < 0) throw std::invalid_argument("CrystalGraph: max_n < 0");
    // residues that can label an edge up to degree max_n: the whole index
    // set when finite, 0..max_n-1 for the infinite type (an addable slot
    // in degree < n has column <= n, hence residue <= n-1)
    rank_ = ct.is_infinite() ? std::max(max_n, 1) : ct.ell() + 1;

    auto make_node = [&](const Partition& lam) {
        GraphNode nd;
        nd.partition = lam;
        nd.deg = degree(lam);
        nd.gamma = content(lam, ct_);
        for (Residue i = 0; i < rank_; ++i) {
            nd.eps.push_back(eps(lam, ct_, i));
            nd.phi.push_back(phi(lam, ct_, i));
        }
        nd.type = b_of(lam, ct_) % 2 == 0 ? ModuleType::M : ModuleType::Q;
        return nd;
    };

    layers_.push_back({make_node({})});
    for (int n = 0; n < max_n_; ++n) {
        std::set<Partition> next;
        for (const auto& nd : layers_[n]) {
            for (Residue i = 0; i < rank_; ++i) {
                auto mu = f_tilde(nd.partition, ct_, i);
                if (!mu) continue;
                edges_.push_back({nd.partition, i, *mu});
                next.insert(*mu);
            }
        }
        layers_.emplace_back();
        for (const auto& lam : next) layers_.back().push_back(make_node(lam));
    }
    std::sort(edges_.begin(), edges_.end(), [](const GraphEdge& a, const GraphEdge& b) {
        if (a.from != b.from) return a.from < b.from;
        return a.label < b.label;
    });
}

std::string CrystalGraph::export_dot() const {
    std::ostringstream os;
    os << "digraph crystal {\n";
    os << "  rankdir=TB;\n";
    for (const auto& layer : layers_)
        for (const auto& nd : layer)
            os << "  \"" << to_string(nd.partition) << "\" [shape="
               << (nd.type == ModuleType::M ? "box" : "ellipse") << "];\n";
    for (const auto& e : edges_)
        os << "  \"" << to_string(e.from) << "\" -> \"" << to_string(e.to)
           << "\" [label=\"" << e.label << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string CrystalGraph::export_json() const {
    nlohmann::ordered_json j;
    if (ct_.is_infinite())
        j["h"] = "inf";
    else
        j["h"] = ct_.h();
    j["max_n"] = max_n_;
    j["nodes"] = nlohmann::ordered_json::array();
    for (const auto& layer : layers_)
        for (const auto& nd : layer) {
            nlohmann::ordered_json jn;
            jn["partition"] = nd.partition;
            jn["degree"] = nd.deg;
            jn["content"] = nlohmann::ordered_json::object();
            for (auto& [i, c] : nd.gamma.entries())
                jn["content"][std::to_string(i)] = c;
            jn["eps"] = nd.eps;
            jn["phi"] = nd.phi;
            jn["type"] = nd.type == ModuleType::M ? "M" : "Q";
            j["nodes"].push_back(std::move(jn));
        }
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : edges_) {
        nlohmann::ordered_json je;
        je["from"] = e.from;
        je["label"] = e.label;
        je["to"] = e.to;
        j["edges"].push_back(std::move(je));
    }
    return j.dump(2) + "\n";
}

std::optional<Partition> path_to_partition(const std::vector<Residue>& labels,
                                           const CartanType& ct) {
    Partition lam;
    for (Residue i : labels) {
        if (!ct.in_index_set(i)) return std::nullopt;
        auto mu = f_tilde(lam, ct, i);
        if (!mu) return std::nullopt;
        lam = *mu;
    }
    return lam;
}

std::vector<Residue> partition_to_canonical_path(const Partition& lam, const CartanType& ct) {
    if (!is_restricted(lam, ct))
        throw std::invalid_argument("partition_to_canonical_path: not restricted h-strict: " +
                                    to_string(lam));
    std::vector<Residue> path;
    Partition cur = lam;
    while (!cur.empty()) {
        int limit = ct.is_infinite() ? cur[0] : ct.ell() + 1;
        bool moved = false;
        for (Residue i = 0; i < limit; ++i) {
            if (eps(cur, ct, i) > 0) {
                path.push_back(i);
                cur = *e_tilde(cur, ct, i);
                moved = true;
                break;
            }
        }
        if (!moved)
            throw std::logic_error("partition_to_canonical_path: stuck at " + to_string(cur));
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace spincrystal
