#include "melonforge/gm.hpp"

#include <algorithm>

#include "melonforge/error.hpp"

namespace melonforge {

GmCertificate make_certificate(int d, VertexId base_white, VertexId base_black,
                               std::vector<InsertionStep> sequence) {
  GmCertificate cert;
  cert.d = d;
  cert.base_white = base_white;
  cert.base_black = base_black;
  cert.sequence = std::move(sequence);
  // Colors of the vertices are tracked to orient each new pair white-first.
  std::map<VertexId, bool> white{{base_white, true}, {base_black, false}};
  cert.pairing.push_back({base_white, base_black});
  for (const InsertionStep& s : cert.sequence) {
    auto it = white.find(s.at);
    if (it == white.end()) {
      throw Error(Errc::VertexNotFound, "insertion at unknown vertex " + std::to_string(s.at));
    }
    const bool at_white = it->second;
    white[s.new_v] = at_white;
    white[s.new_vbar] = !at_white;
    cert.multiset[s.colors] += 1;
    cert.pairing.push_back(at_white ? VertexPair{s.new_v, s.new_vbar} : VertexPair{s.new_vbar, s.new_v});
  }
  std::sort(cert.pairing.begin(), cert.pairing.end());
  return cert;
}

Bubble replay(const GmCertificate& cert) {
  Bubble b = Bubble::two_vertex(cert.d, cert.base_white, cert.base_black);
  for (const InsertionStep& s : cert.sequence) b = insert_bidipole(b, s.at, s.colors, s.new_v, s.new_vbar);
  return b;
}

namespace {

GmCertificate certificate_from_removals(const Bubble& last, std::vector<Bidipole> removed) {
  std::vector<InsertionStep> steps;
  steps.reserve(removed.size());
  for (auto it = removed.rbegin(); it != removed.rend(); ++it)
    steps.push_back({it->w, it->colors, it->v, it->vbar});
  const auto whites = last.whites();
  const auto blacks = last.blacks();
  return make_certificate(last.d(), whites.front(), blacks.front(), std::move(steps));
}

void search_removals(const Bubble& b, std::vector<Bidipole>& removed, std::vector<GmCertificate>& out,
                     std::size_t limit) {
  if (out.size() >= limit) return;
  if (b.num_vertices() == 2) {
    out.push_back(certificate_from_removals(b, removed));
    return;
  }
  for (const Bidipole& dp : find_bidipoles(b)) {
    removed.push_back(dp);
    search_removals(remove_bidipole(b, dp), removed, out, limit);
    removed.pop_back();
    if (out.size() >= limit) return;
  }
}

void check_size(const Bubble& b, int max_vertices) {
  if (b.num_vertices() > max_vertices) {
    throw Error(Errc::SizeLimitExceeded, "exhaustive recognition limited to " +
                                             std::to_string(max_vertices) + " vertices, bubble has " +
                                             std::to_string(b.num_vertices()));
  }
}

}  // namespace

std::optional<GmCertificate> recognize_gm(const Bubble& b) {
  return recognize_gm(b, [](const std::vector<Bidipole>&) { return std::size_t{0}; });
}

std::optional<GmCertificate> recognize_gm(const Bubble& b, const BidipoleChooser& choose) {
  Bubble cur = b;
  std::vector<Bidipole> removed;
  while (cur.num_vertices() > 2) {
    const auto options = find_bidipoles(cur);
    if (options.empty()) return std::nullopt;
    const std::size_t k = choose(options);
    if (k >= options.size()) throw Error(Errc::InvalidArgument, "bidipole chooser returned an invalid index");
    removed.push_back(options[k]);
    cur = remove_bidipole(cur, options[k]);
  }
  return certificate_from_removals(cur, std::move(removed));
}

std::optional<GmCertificate> recognize_gm_backtracking(const Bubble& b, int max_vertices) {
  auto all = all_removal_certificates(b, 1, max_vertices);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<GmCertificate> all_removal_certificates(const Bubble& b, std::size_t limit, int max_vertices) {
  check_size(b, max_vertices);
  std::vector<GmCertificate> out;
  std::vector<Bidipole> removed;
  search_removals(b, removed, out, limit);
  return out;
}

std::vector<VertexPair> canonical_pairing(const GmCertificate& cert) { return cert.pairing; }

bool is_totally_unbalanced(const GmCertificate& cert) {
  return std::all_of(cert.multiset.begin(), cert.multiset.end(),
                     [](const auto& kv) { return 2 * kv.first.size() < kv.first.d(); });
}

int weighted_insertion_count(const GmCertificate& cert) {
  int total = 0;
  for (const auto& [colors, count] : cert.multiset) total += colors.size() * count;
  return total;
}

Rational scaling_coefficient(const GmCertificate& cert) {
  return scaling_coefficient(cert, cert.d, cert.num_vertices());
}

Rational scaling_coefficient(const GmCertificate& cert, int d, int num_vertices) {
  if (d != cert.d || num_vertices != cert.num_vertices()) {
    throw Error(Errc::CertificateMismatch, "certificate describes d=" + std::to_string(cert.d) + ", V=" +
                                               std::to_string(cert.num_vertices()) + ", not d=" +
                                               std::to_string(d) + ", V=" + std::to_string(num_vertices));
  }
  return Rational(weighted_insertion_count(cert)) - Rational(d * (num_vertices - 2), 2);
}

}  // namespace melonforge
