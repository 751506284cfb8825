#include "ladder/orbit.hpp"

#include <array>

namespace ladder {

namespace {

enum class LastFactor { none, t, r };

struct Syllable {
  Letter letter;
  std::int64_t cost;
};

// First-syllable fan-out order; subtrees are independent, so the parallel
// variant processes them out of order and stitches results back in order.
std::vector<Syllable> first_syllables(int budget) {
  std::vector<Syllable> out;
  for (std::int64_t j = 1; j <= budget; ++j) {
    out.push_back({Letter{false, j}, j});
    out.push_back({Letter{false, -j}, j});
  }
  if (budget >= 1) {
    out.push_back({Letter{true, 1}, 1});
    out.push_back({Letter{true, 2}, 1});
  }
  return out;
}

struct Walker {
  const LadderParams& params;
  QuadExt shear;
  MoebiusElement r1, r2;
  const std::function<void(const GroupWord&, const MoebiusElement&)>& fn;

  MoebiusElement letter_matrix(const Letter& l) const {
    if (l.is_r) return l.exp == 1 ? r1 : r2;
    return MoebiusElement(QuadExt(1), QuadExt(Rational(l.exp)) * shear,
                          QuadExt(0), QuadExt(1));
  }

  void dfs(GroupWord& word, const MoebiusElement& elem, LastFactor last,
           std::int64_t budget) {
    fn(word, elem);
    if (budget <= 0) return;
    if (last != LastFactor::t) {
      for (std::int64_t j = 1; j <= budget; ++j) {
        for (std::int64_t sgn : {1LL, -1LL}) {
          Letter l{false, sgn * j};
          word.append(l);  // alternation: never merges
          dfs(word, elem * letter_matrix(l), LastFactor::t, budget - j);
          word.pop_back();
        }
      }
    }
    if (last != LastFactor::r) {
      for (std::int64_t e : {1LL, 2LL}) {
        Letter l{true, e};
        word.append(l);
        dfs(word, elem * letter_matrix(l), LastFactor::r, budget - 1);
        word.pop_back();
      }
    }
  }
};

}  // namespace

void for_each_normal_word(
    const LadderParams& params, int max_len,
    const std::function<void(const GroupWord&, const MoebiusElement&)>& fn) {
  if (max_len < 0) throw invalid_parameters("max_len must be >= 0");
  MoebiusElement r = rotation_R();
  Walker w{params, params.shear(), r, r * r, fn};
  GroupWord root;
  w.dfs(root, MoebiusElement(), LastFactor::none, max_len);
}

std::vector<WordElement> collect_ball(const LadderParams& params, int max_len,
                                      bool parallel) {
  if (max_len < 0) throw invalid_parameters("max_len must be >= 0");
  std::vector<WordElement> out;
  out.push_back({GroupWord(), MoebiusElement()});
  auto tasks = first_syllables(max_len);
  std::vector<std::vector<WordElement>> buckets(tasks.size());

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (size_t i = 0; i < tasks.size(); ++i) {
    const Syllable& head = tasks[i];
    MoebiusElement r = rotation_R();
    auto sink = [&buckets, i](const GroupWord& w, const MoebiusElement& m) {
      buckets[i].push_back({w, m});
    };
    std::function<void(const GroupWord&, const MoebiusElement&)> fn = sink;
    Walker walker{params, params.shear(), r, r * r, fn};
    GroupWord word;
    word.append(head.letter);
    walker.dfs(word, walker.letter_matrix(head.letter),
               head.letter.is_r ? LastFactor::r : LastFactor::t,
               max_len - head.cost);
  }
  for (auto& b : buckets)
    out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::uint64_t normal_form_count(int max_len) {
  if (max_len < 0) throw invalid_parameters("max_len must be >= 0");
  // f_t[c]: words of generator length exactly c ending in a T syllable;
  // f_r[c]: ending in an R syllable. T syllables cost |exp| with 2 sign
  // choices; R syllables cost 1 with 2 exponent choices.
  std::vector<std::uint64_t> f_t(static_cast<size_t>(max_len) + 1, 0);
  std::vector<std::uint64_t> f_r(static_cast<size_t>(max_len) + 1, 0);
  for (int c = 1; c <= max_len; ++c) {
    std::uint64_t t = 2;  // bare T^{+-c}
    for (int j = 1; j < c; ++j) t += 2 * f_r[static_cast<size_t>(c - j)];
    f_t[static_cast<size_t>(c)] = t;
    f_r[static_cast<size_t>(c)] =
        2 * f_t[static_cast<size_t>(c - 1)] + (c == 1 ? 2 : 0);
  }
  std::uint64_t total = 1;
  for (int c = 1; c <= max_len; ++c)
    total += f_t[static_cast<size_t>(c)] + f_r[static_cast<size_t>(c)];
  return total;
}

namespace {

bool images_stay_outside(const LadderParams& params, const MoebiusElement& m) {
  static const std::array<BoundaryPoint, 3> cusps = {
      BoundaryPoint::infinity(), BoundaryPoint::at(QuadExt(0)),
      BoundaryPoint::at(QuadExt(-1))};
  const QuadExt& lam = params.lambda;
  QuadExt lam_inv = lam.inverse();
  for (const BoundaryPoint& c : cusps) {
    BoundaryPoint img = apply(m, c);
    if (img.infinite) continue;
    if (lam < img.value && img.value < lam_inv) return false;
  }
  return true;
}

}  // namespace

bool cusp_gap_holds(const LadderParams& params, int max_len, bool parallel) {
  if (!parallel) {
    bool ok = true;
    for_each_normal_word(params, max_len,
                         [&](const GroupWord&, const MoebiusElement& m) {
                           if (!images_stay_outside(params, m)) ok = false;
                         });
    return ok;
  }
  auto tasks = first_syllables(max_len);
  bool ok = images_stay_outside(params, MoebiusElement());
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
  for (size_t i = 0; i < tasks.size(); ++i) {
    const Syllable& head = tasks[i];
    bool local = true;
    MoebiusElement r = rotation_R();
    std::function<void(const GroupWord&, const MoebiusElement&)> fn =
        [&](const GroupWord&, const MoebiusElement& m) {
          if (!images_stay_outside(params, m)) local = false;
        };
    Walker walker{params, params.shear(), r, r * r, fn};
    GroupWord word;
    word.append(head.letter);
    walker.dfs(word, walker.letter_matrix(head.letter),
               head.letter.is_r ? LastFactor::r : LastFactor::t,
               max_len - head.cost);
    ok = ok && local;
  }
  return ok;
}

std::vector<ReductionResult> reduce_batch(const FundamentalDomain& dom,
                                          const std::vector<HalfPlanePoint>& zs,
                                          bool parallel) {
  std::vector<ReductionResult> out(zs.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (size_t i = 0; i < zs.size(); ++i) out[i] = reduce(dom, zs[i]);
  return out;
}

}  // namespace ladder
