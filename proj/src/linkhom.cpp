#include "abslice/linkhom.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

namespace abslice::link {

namespace {

FreeWord m(int i) { return FreeWord::generator(i); }

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto piece = text.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || ptr != piece.data() + piece.size() || piece.empty()) {
      throw std::invalid_argument("malformed integer list '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw std::invalid_argument("trailing comma in integer list");
  }
  return out;
}

}  // namespace

void LinkPresentation::check() const {
  if (n < 0) throw std::invalid_argument("negative component count");
  if (static_cast<int>(longitudes.size()) != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " longitudes, got " +
                                std::to_string(longitudes.size()));
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    throw std::invalid_argument("label count does not match component count");
  }
  for (int i = 0; i < n; ++i) {
    if (longitudes[i].max_generator() > n) {
      throw std::invalid_argument("longitude " + std::to_string(i + 1) +
                                  " uses a generator beyond m" + std::to_string(n));
    }
  }
}

std::vector<std::string> diagnostics(const LinkPresentation& L) {
  std::vector<std::string> out;
  const auto lk = linking_matrix(L);
  for (int i = 0; i < L.n; ++i) {
    for (int j = i + 1; j < L.n; ++j) {
      if (lk[i][j] != lk[j][i]) {
        out.push_back("linking matrix asymmetric at (" + std::to_string(i + 1) + "," +
                      std::to_string(j + 1) + "): " + std::to_string(lk[i][j]) + " vs " +
                      std::to_string(lk[j][i]));
      }
    }
  }
  return out;
}

LinkPresentation unlink(int n) {
  if (n < 1) throw std::invalid_argument("unlink needs at least one component");
  return {n, std::vector<FreeWord>(n), {}};
}

LinkPresentation hopf() { return {2, {m(2), m(1)}, {}}; }

LinkPresentation borromean() {
  using word::commutator;
  return {3, {commutator(m(2), m(3)), commutator(m(3), m(1)), commutator(m(1), m(2))}, {}};
}

LinkPresentation bing_tower(const std::vector<int>& schedule) {
  LinkPresentation L = hopf();
  for (int i : schedule) L = bing_double(L, i);
  return L;
}

LinkPresentation catalog(const std::string& name) {
  if (name == "hopf") return hopf();
  if (name == "borromean") return borromean();
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string head = name.substr(0, colon);
    const auto args = parse_int_list(std::string_view(name).substr(colon + 1));
    if (head == "unlink" && args.size() == 1) return unlink(args[0]);
    if (head == "bing" && !args.empty()) {
      LinkPresentation L = hopf();
      for (int i : args) {
        if (i < 1 || i > L.n) {
          throw std::invalid_argument("bing schedule entry " + std::to_string(i) +
                                      " out of range for " + std::to_string(L.n) +
                                      " components");
        }
        L = bing_double(L, i);
      }
      return L;
    }
  }
  throw std::invalid_argument("unknown link '" + name +
                              "' (expected unlink:N, hopf, borromean, bing:i,j,...)");
}

Integer mu_distinct(const LinkPresentation& L, const IndexSeq& I) {
  if (I.size() < 2) throw std::invalid_argument("mu index sequence needs length >= 2");
  for (int i : I) {
    if (i < 1 || i > L.n) throw std::out_of_range("mu index " + std::to_string(i) + " out of range");
  }
  if (!word::is_square_free(I)) throw std::invalid_argument("mu index sequence has a repeated index");
  const int j = I.back();
  const auto expansion = word::magnus_reduced(L.longitudes[j - 1], L.n);
  return expansion.coefficient(IndexSeq(I.begin(), I.end() - 1));
}

std::optional<std::vector<MuCertificate>> first_non_vanishing_mu(const LinkPresentation& L) {
  L.check();
  std::vector<word::ReducedPoly> expansions;
  expansions.reserve(L.n);
  for (const auto& l : L.longitudes) expansions.push_back(word::magnus_reduced(l, L.n));

  for (int order = 2; order <= L.n; ++order) {
    std::vector<MuCertificate> found;
    for (int j = 1; j <= L.n; ++j) {
      for (const auto& [mono, coeff] : expansions[j - 1].terms()) {
        if (static_cast<int>(mono.size()) != order - 1) continue;
        if (std::find(mono.begin(), mono.end(), j) != mono.end()) continue;
        IndexSeq seq = mono;
        seq.push_back(j);
        found.push_back({std::move(seq), coeff, order, true});
      }
    }
    if (!found.empty()) return found;
  }
  return std::nullopt;
}

std::optional<MuCertificate> homotopic_essential_cert(const LinkPresentation& L) {
  auto all = first_non_vanishing_mu(L);
  if (!all) return std::nullopt;
  return all->front();
}

LinkPresentation bing_double(const LinkPresentation& L, int i) {
  L.check();
  if (i < 1 || i > L.n) {
    throw std::out_of_range("component " + std::to_string(i) + " out of range 1.." +
                            std::to_string(L.n));
  }
  const int partner = L.n + 1;
  // A meridian of the doubled solid torus is a commutator of the two new meridians.
  const std::map<int, FreeWord> images{{i, word::commutator(m(i), m(partner))}};

  LinkPresentation out;
  out.n = L.n + 1;
  out.longitudes.reserve(out.n);
  for (const auto& l : L.longitudes) out.longitudes.push_back(word::substitute(l, images));

  // The core of the pattern solid torus follows the old longitude; each clasp
  // component's longitude is the commutator of the partner meridian with it.
  const FreeWord core = out.longitudes[i - 1];
  out.longitudes[i - 1] = word::commutator(m(partner), core);
  out.longitudes.push_back(word::commutator(core, m(i)));

  if (!L.labels.empty()) {
    out.labels = L.labels;
    const std::string base = L.labels[i - 1];
    out.labels[i - 1] = base + ".a";
    out.labels.push_back(base + ".b");
  }
  return out;
}

std::vector<std::vector<int>> linking_matrix(const LinkPresentation& L) {
  std::vector<std::vector<int>> lk(L.n, std::vector<int>(L.n, 0));
  for (int i = 0; i < L.n; ++i)
    for (int j = 0; j < L.n; ++j)
      if (i != j) lk[i][j] = L.longitudes[i].exponent_sum(j + 1);
  return lk;
}

LinkPresentation parallel_copy_link(const LinkPresentation& L) {
  L.check();
  LinkPresentation out;
  out.n = 2 * L.n;
  out.longitudes.resize(out.n);
  for (int i = 1; i <= L.n; ++i) {
    // m_j is accompanied by its parallel meridian m_{n+j}; the component's own
    // meridian is left alone so the copy is untwisted.
    std::map<int, FreeWord> images;
    for (int j = 1; j <= L.n; ++j) {
      if (j != i) images.emplace(j, FreeWord({{j, 1}, {L.n + j, 1}}));
    }
    const FreeWord l = word::substitute(L.longitudes[i - 1], images);
    out.longitudes[i - 1] = l;
    out.longitudes[L.n + i - 1] = l;
  }
  if (!L.labels.empty()) {
    out.labels = L.labels;
    for (const auto& s : L.labels) out.labels.push_back(s + "'");
  }
  return out;
}

}  // namespace abslice::link
