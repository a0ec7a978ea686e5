#include "tb/words.hpp"

#include <cctype>
#include <random>

#include "tb/thompson_t.hpp"

namespace tb {

namespace {

Word lowercase(const Word& w) {
  Word out = w;
  for (Letter& l : out) l.symbol = static_cast<char>(std::tolower(static_cast<unsigned char>(l.symbol)));
  return out;
}

// An element of <beta, gamma, delta> realising t, with its word.
std::pair<Element, Word> realise(const TreePair& t) { return {tau_inv(t), lowercase(factor_T(t))}; }

const Word kAlpha{{'a', false}};
const Word kAlphaInverse{{'a', true}};

void check_measure(const MeasureHook& hook, std::size_t before, std::size_t after) {
  if (hook) hook(before, after);
  if (after >= before)
    throw Error(ErrorCode::Internal, std::to_string(before) + "->" + std::to_string(after),
                "decomposition measure did not decrease");
}

Word decompose_fixing_center(const Element& h, const MeasureHook& hook);

// h preserves the central gap.
Word decompose_stabiliser(const Element& f1, const MeasureHook& hook) {
  auto [g, g_word] = realise(boundary_action(f1));
  Element h = compose(inverse(g), f1);
  return concat(g_word, decompose_fixing_center(h, hook));
}

Word decompose_any(const Element& f, const MeasureHook& hook) {
  Word w1 = transport_gap_to_center(image_of_gap(f, GapId::central()));
  Element f1 = compose(eval_word(w1), f);
  return concat(inverse_word(w1), decompose_stabiliser(f1, hook));
}

// h fixes every central arc.
Word decompose_fixing_center(const Element& h_in, const MeasureHook& hook) {
  const Element h = reduce(h_in);
  auto sections = h.domain().occupied_sections();
  if (sections != h.range().occupied_sections())
    throw Error(ErrorCode::Internal, h.to_string(), "domain and range sections differ");
  if (sections.empty()) {
    if (!(h == identity())) throw Error(ErrorCode::Internal, h.to_string(), "central part is not trivial");
    return {};
  }
  const std::size_t n = h.arc_count();

  if (sections.size() > 1) {
    Word out;
    for (const Arc& a : sections) {
      Element piece = reduce(Element::make(h.domain().strip_sections(a), h.range().strip_sections(a), 0));
      check_measure(hook, n, piece.arc_count());
      out = concat(out, decompose_any(piece, hook));
    }
    return out;
  }

  // One section: rotate its arc to {1/6,5/6} and pull it through alpha.
  const Arc& a = sections.front();
  const ArcDiagram skeleton = h.domain().strip_sections();
  const HalfForest cuts = central_forest(skeleton);
  TreePair frame{cuts, cuts, 0};
  long position = 0;
  const Angle label = central_label(a);
  for (const Arc& c : skeleton.central_arcs()) {
    if (central_label(c) == label) break;
    ++position;
  }
  frame.offset = static_cast<std::size_t>((static_cast<long>(frame.leaf_count()) - position) %
                                          static_cast<long>(frame.leaf_count()));
  auto [rho, rho_word] = realise(frame);
  Element k = compose(rho, compose(h, inverse(rho)));
  Element k_prime = reduce(compose(inverse(generator(Generator::Alpha)), compose(k, generator(Generator::Alpha))));
  check_measure(hook, n, k_prime.arc_count());
  return concat({inverse_word(rho_word), kAlpha, decompose_any(k_prime, hook), kAlphaInverse, rho_word});
}

}  // namespace

Element eval_word(const Word& w) {
  Element out;
  for (const Letter& l : w) {
    Element g = generator(generator_from_letter(l.symbol));
    out = compose(out, l.inverse ? inverse(g) : g);
  }
  return out;
}

Word transport_gap_to_center(const GapId& gap) {
  Word out;
  GapId current = gap;
  while (!current.is_central()) {
    const Arc& a = *current.behind;
    auto up = ancestors(a);
    const Arc outer = up.empty() ? a : up.front();
    auto [f, f_word] = realise(t_transporter(central_label(outer), Angle::make(1, 2)));
    Element step = compose(generator(Generator::Alpha), f);
    GapId next = image_of_gap(step, current);
    if (gap_depth(next) >= gap_depth(current))
      throw Error(ErrorCode::Internal, current.to_string(), "transport step did not approach the center");
    current = std::move(next);
    out = concat({kAlpha, f_word, out});
  }
  return out;
}

Word decompose(const Element& f, const MeasureHook& hook) { return decompose_any(reduce(f), hook); }

int abelianize(const Element& f) { return gap_color(image_of_gap(f, GapId::central())); }

bool is_in_commutator(const Element& f) { return abelianize(f) == 0; }

Word random_word(std::uint64_t seed, std::size_t length) {
  static constexpr char kLetters[] = {'a', 'b', 'g', 'd'};
  std::mt19937_64 rng(seed);
  Word out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    std::uint64_t r = rng() % 8;
    out.push_back({kLetters[r / 2], r % 2 == 1});
  }
  return out;
}

Element random_element(std::uint64_t seed, std::size_t length) { return eval_word(random_word(seed, length)); }

}  // namespace tb
