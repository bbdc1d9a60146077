#include "sog/gadget.hpp"

#include "sog/errors.hpp"

namespace sog {

void GadgetParams::validate() const {
  if (d < 3) throw DomainError("gadget needs d >= 3, got " + std::to_string(d));
  if (u < 0 || u == 1) throw DomainError("gadget needs u = 0 or u >= 2, got " + std::to_string(u));
  if (path_internal < 1) throw DomainError("gadget paths need at least one internal vertex");
}

namespace {

void chain(Graph& g, const VertexId& from, const std::vector<VertexId>& inner, const VertexId& to) {
  VertexId previous = from;
  for (const auto& v : inner) {
    g.add_edge(previous, v);
    previous = v;
  }
  g.add_edge(previous, to);
}

}  // namespace

Gadget build_gadget(const GadgetParams& p) {
  p.validate();
  Gadget out;
  const VertexId vs = "gadget:vs";
  const VertexId vb = "gadget:vb";
  const VertexId vb_prime = "gadget:vb_prime";
  out.named = {{"vs", vs}, {"vb", vb}, {"vb_prime", vb_prime}};
  out.graph.add_vertex(vs);
  out.graph.add_vertex(vb);

  const int middle = (p.path_internal + 1) / 2;
  for (int i = 1; i <= p.d; ++i) {
    std::vector<VertexId> inner;
    for (int j = 1; j <= p.path_internal; ++j) {
      VertexId v = (i == 1 && j == middle) ? vb_prime
                                           : "gadget:path" + std::to_string(i) + "." + std::to_string(j);
      out.graph.add_vertex(v);
      inner.push_back(v);
    }
    chain(out.graph, vs, inner, vb);
    out.main_paths.push_back(std::move(inner));
  }

  if (p.u >= 2) {
    const VertexId vs_prime = "gadget:vs_prime";
    out.named["vs_prime"] = vs_prime;
    out.graph.add_vertex(vs_prime);
    for (int j = 1; j <= p.u; ++j) {
      std::vector<VertexId> inner;
      for (int m = 1; m <= p.path_internal; ++m) {
        VertexId v = "gadget:side" + std::to_string(j) + "." + std::to_string(m);
        out.graph.add_vertex(v);
        inner.push_back(v);
      }
      chain(out.graph, vs_prime, inner, vb_prime);
      out.side_paths.push_back(std::move(inner));
    }
  }
  return out;
}

}  // namespace sog
