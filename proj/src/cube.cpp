#include "hpd/cube.hpp"

namespace hpd {

PathEmbedding f_gamma(int q, Vertex gamma) {
  require_dim(q);
  require_vertex(q, gamma);
  if (parity(gamma) != 0)
    throw InvalidIndex("f_gamma requires an even-parity translate");
  PathEmbedding p;
  p.q = q;
  p.verts.resize(q + 1);
  for (int k = 0; k <= q; ++k) p.verts[k] = low_mask(k) ^ gamma;
  return p;
}

Decomposition base_partition(int q) {
  if (q < 1) throw InvalidParameter("base_partition needs q >= 1");
  require_materializable(q, kDefaultMaxEdges);
  const std::uint64_t count = std::uint64_t{1} << (q - 1);
  return Decomposition(q, q, count, [q](const Decomposition::Sink& sink) {
    const Vertex end = Vertex{1} << q;
    for (Vertex gamma = 0; gamma < end; ++gamma) {
      if (parity(gamma) != 0) continue;
      sink(f_gamma(q, gamma));
    }
  });
}

}  // namespace hpd
