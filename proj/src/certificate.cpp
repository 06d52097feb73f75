#include "bstar/certificate.hpp"

#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bstar {

Certificate make_certificate(const EdgeRef& e, const CycleWitness& c) {
  return Certificate{e.dimension(), c.length(), e.u, e.v, c};
}

std::string to_jsonl(const Certificate& cert) {
  nlohmann::ordered_json j;
  j["n"] = cert.n;
  j["length"] = cert.length;
  j["edge"] = {format_perm(cert.edge_u), format_perm(cert.edge_v)};
  auto& vertices = j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : cert.cycle.vertices) vertices.push_back(format_perm(v));
  return j.dump();
}

Certificate parse_certificate(std::string_view line) {
  try {
    const auto j = nlohmann::json::parse(line);
    Certificate cert;
    cert.n = j.at("n").get<int>();
    cert.length = j.at("length").get<std::uint64_t>();
    const auto edge = j.at("edge").get<std::vector<std::string>>();
    if (edge.size() != 2) throw std::invalid_argument("edge must list two endpoints");
    cert.edge_u = parse_perm(edge[0]);
    cert.edge_v = parse_perm(edge[1]);
    const auto& vertices = j.at("vertices");
    if (!vertices.is_array()) throw std::invalid_argument("vertices must be an array");
    for (const auto& v : vertices) cert.cycle.vertices.push_back(parse_perm(v.get<std::string>()));
    return cert;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed certificate: ") + ex.what());
  }
}

void write_edge_list(std::ostream& out, int n) {
  const auto edges = all_edges(n);
  out << "# bs n=" << n << " vertices=" << count_vertices(n) << " edges=" << edges.size() << '\n';
  for (const auto& e : edges) out << format_perm(e.u) << '\t' << format_perm(e.v) << '\n';
}

void write_edge_jsonl(std::ostream& out, int n) {
  for (const auto& e : all_edges(n)) {
    nlohmann::ordered_json j;
    j["u"] = format_perm(e.u);
    j["v"] = format_perm(e.v);
    j["class"] = e.cls.to_string();
    out << j.dump() << '\n';
  }
}

}  // namespace bstar
