#include "s1fix/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "s1fix/invariants.hpp"

namespace s1fix {

std::optional<std::size_t> Corpus::find(const FixedPointData& data) const {
  auto it = index_.find(data);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ConstructionTrace Corpus::trace(std::size_t i) const {
  ConstructionTrace t;
  for (std::optional<std::size_t> cur = i; cur && entries_[*cur].parent; cur = entries_[*cur].parent) {
    t.push_back(entries_[*cur].step);
  }
  std::reverse(t.begin(), t.end());
  return t;
}

std::vector<std::size_t> Corpus::canonical_order() const {
  std::vector<std::size_t> order(entries_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [this](std::size_t x, std::size_t y) {
    const auto& dx = entries_[x].data;
    const auto& dy = entries_[y].data;
    if (dx.size() != dy.size()) return dx.size() < dy.size();
    return dx < dy;
  });
  return order;
}

bool Corpus::insert(FixedPointData data, std::optional<std::size_t> parent, ConstructionStep step) {
  if (index_.contains(data)) return false;
  index_.emplace(data, entries_.size());
  entries_.push_back({std::move(data), parent, step});
  return true;
}

namespace {

struct Child {
  FixedPointData data;
  std::size_t parent;
  ConstructionStep step;
};

void expand(const Corpus& corpus, std::size_t parent, const EnumerationBounds& bounds,
            const std::vector<std::pair<Weight, Weight>>& spheres, std::vector<Child>& out) {
  const FixedPointData& data = corpus.data(parent);
  if (data.size() + 2 <= bounds.max_points) {
    for (const auto& [a, b] : spheres) {
      out.push_back({add_sphere(data, a, b), parent, ConstructionStep::add_sphere(a, b)});
    }
  }
  if (data.size() + 1 <= bounds.max_points) {
    for (std::size_t i = 0; i < data.size(); ++i) {
      const auto& p = data[i];
      if (i > 0 && data[i - 1] == p) continue;
      const Weight a = p.weights()[0], b = p.weights()[1];
      if (static_cast<std::uint64_t>(a) + b > bounds.max_weight) continue;
      out.push_back({blow_up(data, p), parent, ConstructionStep::blow_up(p.sign(), a, b)});
    }
  }
}

}  // namespace

Corpus enumerate(const EnumerationBounds& bounds, unsigned jobs) {
  if (bounds.max_weight < 1) throw Error(ErrorCode::InvalidArgument, "max weight must be at least 1");
  jobs = std::max(1u, jobs);

  std::vector<std::pair<Weight, Weight>> spheres;
  for (Weight a = 1; a <= bounds.max_weight; ++a) {
    for (Weight b = a; b <= bounds.max_weight; ++b) {
      if (std::gcd(a, b) == 1) spheres.emplace_back(a, b);
    }
  }

  Corpus corpus;
  corpus.insert(FixedPointData{}, std::nullopt, ConstructionStep::add_sphere(1, 1));
  std::vector<std::size_t> frontier{0};

  while (!frontier.empty()) {
    // Children per chunk, merged in frontier order so discovery is
    // independent of the thread count.
    const std::size_t chunks = std::min<std::size_t>(jobs, frontier.size());
    std::vector<std::vector<Child>> produced(chunks);
    auto work = [&](std::size_t c) {
      const std::size_t lo = frontier.size() * c / chunks;
      const std::size_t hi = frontier.size() * (c + 1) / chunks;
      for (std::size_t i = lo; i < hi; ++i) expand(corpus, frontier[i], bounds, spheres, produced[c]);
    };
    if (chunks == 1) {
      work(0);
    } else {
      std::vector<std::jthread> threads;
      for (std::size_t c = 0; c < chunks; ++c) threads.emplace_back(work, c);
    }

    std::vector<std::size_t> next;
    for (auto& chunk : produced) {
      for (auto& child : chunk) {
        if (corpus.insert(std::move(child.data), child.parent, child.step)) next.push_back(corpus.size() - 1);
      }
    }
    frontier = std::move(next);
  }
  return corpus;
}

std::vector<FixedPointData> candidate_universe(const EnumerationBounds& bounds) {
  std::vector<FixedPointDatum> alphabet;
  for (Weight a = 1; a <= bounds.max_weight; ++a) {
    for (Weight b = a; b <= bounds.max_weight; ++b) {
      if (std::gcd(a, b) != 1) continue;
      alphabet.emplace_back(Sign::Plus, std::vector<Weight>{a, b});
      alphabet.emplace_back(Sign::Minus, std::vector<Weight>{a, b});
    }
  }
  std::sort(alphabet.begin(), alphabet.end());

  std::vector<FixedPointData> out;
  std::vector<FixedPointDatum> current;
  // Non-decreasing index sequences enumerate multisets without repeats.
  auto rec = [&](auto&& self, std::size_t from) -> void {
    out.emplace_back(current);
    if (current.size() == bounds.max_points) return;
    for (std::size_t i = from; i < alphabet.size(); ++i) {
      current.push_back(alphabet[i]);
      self(self, i);
      current.pop_back();
    }
  };
  rec(rec, 0);
  std::stable_sort(out.begin(), out.end(), [](const FixedPointData& x, const FixedPointData& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

std::set<std::int64_t> signature_spectrum(const Corpus& corpus, std::size_t k) {
  std::set<std::int64_t> out;
  for (const auto& e : corpus) {
    if (e.data.size() == k) out.insert(signature(e.data));
  }
  return out;
}

std::set<std::int64_t> signature_spectrum(std::size_t k, Weight max_weight) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "the spectrum is defined for k >= 2");
  return signature_spectrum(enumerate({k, max_weight}), k);
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::MirroredPair: return "mirrored_pair";
    case Family::SingleBlowUp: return "single_blow_up";
    case Family::TwoMirroredPairs: return "two_mirrored_pairs";
    case Family::DoubleBlowUp: return "double_blow_up";
  }
  return "unknown";
}

namespace {

FixedPointDatum pt(Sign s, std::uint64_t x, std::uint64_t y) {
  return FixedPointDatum(s, {static_cast<Weight>(x), static_cast<Weight>(y)});
}

FixedPointData oriented(std::vector<FixedPointDatum> points, Sign orientation) {
  FixedPointData d(std::move(points));
  return orientation == Sign::Plus ? d : reverse_orientation(d);
}

std::vector<FixedPointDatum> with_sign(const FixedPointData& data, Sign s) {
  std::vector<FixedPointDatum> out;
  for (const auto& p : data) {
    if (p.sign() == s) out.push_back(p);
  }
  return out;
}

}  // namespace

std::vector<Classification> match_families(const FixedPointData& data) {
  std::vector<Classification> out;
  if (data.arity() != 2) return out;
  const std::int64_t sig = signature(data);
  auto add = [&](Family f, Sign o, std::vector<Weight> params) {
    out.push_back({data, f, o, std::move(params), sig});
  };
  auto weights_of = [](const std::vector<FixedPointDatum>& ps) {
    std::vector<std::vector<Weight>> ws;
    for (const auto& p : ps) ws.emplace_back(p.weights().begin(), p.weights().end());
    std::sort(ws.begin(), ws.end());
    return ws;
  };
  const auto plus = with_sign(data, Sign::Plus);
  const auto minus = with_sign(data, Sign::Minus);

  switch (data.size()) {
    case 2:
      if (plus.size() == 1 && minus.size() == 1 && std::ranges::equal(plus[0].weights(), minus[0].weights())) {
        add(Family::MirroredPair, Sign::Plus, {plus[0].weights()[0], plus[0].weights()[1]});
      }
      break;
    case 3:
      for (Sign o : {Sign::Plus, Sign::Minus}) {
        const auto& lone = o == Sign::Plus ? minus : plus;
        if (lone.size() != 1) continue;
        const std::uint64_t a = lone[0].weights()[0], b = lone[0].weights()[1];
        if (oriented({pt(Sign::Minus, a, b), pt(Sign::Plus, a, a + b), pt(Sign::Plus, b, a + b)}, o) == data) {
          add(Family::SingleBlowUp, o, {static_cast<Weight>(a), static_cast<Weight>(b)});
        }
      }
      break;
    case 4: {
      if (plus.size() == 2 && minus.size() == 2 && weights_of(plus) == weights_of(minus)) {
        const auto ws = weights_of(plus);
        add(Family::TwoMirroredPairs, Sign::Plus, {ws[0][0], ws[0][1], ws[1][0], ws[1][1]});
      }
      for (Sign o : {Sign::Plus, Sign::Minus}) {
        const auto& lone = o == Sign::Plus ? minus : plus;
        if (lone.size() != 1) continue;
        const Weight x = lone[0].weights()[0], y = lone[0].weights()[1];
        for (auto [a, b] : {std::pair<std::uint64_t, std::uint64_t>{x, y}, {y, x}}) {
          const auto candidate = oriented({pt(Sign::Minus, a, b), pt(Sign::Plus, a, a + b),
                                           pt(Sign::Plus, b, a + 2 * b), pt(Sign::Plus, a + b, a + 2 * b)},
                                          o);
          if (candidate == data) {
            add(Family::DoubleBlowUp, o, {static_cast<Weight>(a), static_cast<Weight>(b)});
            break;
          }
        }
      }
      break;
    }
    default:
      break;
  }
  return out;
}

std::vector<Classification> classify_small(std::size_t k, Weight max_weight) {
  if (k < 2 || k > 4) throw Error(ErrorCode::InvalidArgument, "classification covers 2, 3 or 4 points");
  const Corpus corpus = enumerate({k, max_weight});
  std::vector<Classification> out;
  for (std::size_t i : corpus.canonical_order()) {
    const auto& data = corpus.data(i);
    if (data.size() != k) continue;
    auto matches = match_families(data);
    std::set<Family> families;
    for (const auto& m : matches) families.insert(m.family);
    if (families.size() != 1) {
      throw Error(ErrorCode::UnmatchedEntry, data.to_string() + " matches " + std::to_string(families.size()) +
                                                 " families",
                  i);
    }
    out.push_back(std::move(matches.front()));
  }
  return out;
}

Json to_json(const Classification& c) {
  Json j = to_json(c.data);
  j["family"] = std::string(to_string(c.family));
  j["orientation"] = to_int(c.orientation);
  j["parameters"] = c.parameters;
  j["signature"] = c.signature;
  return j;
}

}  // namespace s1fix
