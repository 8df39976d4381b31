#include "linkstream/synth.hpp"

#include <limits>

namespace linkstream {

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

namespace {

void check(const GenSpec& spec) {
  if (spec.n == 0) throw PreconditionError("generator needs n >= 1");
  if (!(spec.p >= 0 && spec.p <= 1)) throw PreconditionError("edge probability must be in [0, 1]");
  if (spec.mode == GenMode::discrete && spec.slots == 0) {
    throw PreconditionError("discrete mode needs at least one slot");
  }
  if (spec.mode == GenMode::interval && !(spec.horizon > 0)) {
    throw PreconditionError("interval mode needs a positive horizon");
  }
}

}  // namespace

std::vector<IntervalLink> generate_links(const GenSpec& spec) {
  check(spec);
  Rng rng(spec.seed);
  std::vector<IntervalLink> links;
  for (std::size_t u = 0; u < spec.n; ++u) {
    for (std::size_t v = u + 1; v < spec.n; ++v) {
      if (!(rng.uniform01() < spec.p)) continue;
      IntervalLink link{static_cast<NodeId>(u), static_cast<NodeId>(v), 0, 0};
      if (spec.mode == GenMode::discrete) {
        link.begin = link.end = static_cast<Time>(rng.below(spec.slots));
      } else {
        link.begin = rng.uniform01() * spec.horizon;
        const Time duration = rng.uniform01() * (spec.horizon - link.begin);
        link.end = std::min(link.begin + duration, spec.horizon);
      }
      links.push_back(link);
    }
  }
  return links;
}

LinkStream generate(const GenSpec& spec) {
  const auto links = generate_links(spec);
  return build_link_stream(links, spec.n);
}

LinkStream gen_discrete(GenSpec spec) {
  spec.mode = GenMode::discrete;
  return generate(spec);
}

LinkStream gen_interval(GenSpec spec) {
  spec.mode = GenMode::interval;
  return generate(spec);
}

}  // namespace linkstream
