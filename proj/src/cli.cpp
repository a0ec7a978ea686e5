#include "tb/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>

#include "tb/membership.hpp"
#include "tb/render.hpp"
#include "tb/thompson_t.hpp"
#include "tb/words.hpp"

namespace tb::cli {

namespace {

struct Options {
  std::optional<std::string> element;
  std::vector<std::string> elements;
  std::optional<std::string> word;
  std::optional<std::string> angle;
  std::optional<std::string> pl;
  std::optional<std::string> pair;
  std::optional<std::string> gap;
  std::optional<std::string> diagram;
  std::optional<std::string> out_path;
  std::string style = "plain";
  std::uint64_t seed = 0;
  std::size_t length = 8;
  bool factor = false;
  bool transport = false;
  bool show_word = false;
};

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

bool is_semantic(ErrorCode code) {
  switch (code) {
    case ErrorCode::SlopeNotPowerOfTwo:
    case ErrorCode::BreakpointNotArcEndpoint:
    case ErrorCode::ArcNotPreserved:
    case ErrorCode::ImageNotStandard:
    case ErrorCode::NotInRist:
    case ErrorCode::NotInStab:
    case ErrorCode::NotCentral:
      return true;
    default:
      return false;
  }
}

class Dispatcher {
 public:
  Dispatcher(const Options& o, const InputSource& input) : o_(o), source_(input) {}

  // The element named by --element or --word, falling back to standard input.
  Element subject() const {
    if (o_.element) return Element::parse(*o_.element);
    if (o_.word) return eval_word(parse_word(*o_.word));
    const std::string& in = input();
    if (in.empty()) throw Error(ErrorCode::Parse, "-", "expected --element, --word or standard input");
    if (in.front() == '[') return Element::parse(in);
    return eval_word(parse_word(in));
  }

  std::string text_or_input(const std::optional<std::string>& flag, const char* name) const {
    if (flag) return *flag;
    const std::string& in = input();
    if (in.empty()) throw Error(ErrorCode::Parse, "-", std::string("expected --") + name + " or standard input");
    return in;
  }

  std::string dispatch(const std::string& verb) const {
    if (verb == "reduce") return reduce(subject()).to_string();
    if (verb == "invert") return reduce(inverse(subject())).to_string();
    if (verb == "compose") {
      if (o_.elements.size() != 2) throw Error(ErrorCode::Parse, "-", "compose takes exactly two --element values");
      return compose(Element::parse(o_.elements[0]), Element::parse(o_.elements[1])).to_string();
    }
    if (verb == "eval") {
      Element f = subject();
      if (o_.angle) return f(Angle::parse(*o_.angle)).to_string();
      return reduce(f).to_string();
    }
    if (verb == "word") return eval_word(parse_word(text_or_input(o_.word, "word"))).to_string();
    if (verb == "recognize") return recognize(PLCircleMap::parse(text_or_input(o_.pl, "pl"))).to_string();
    if (verb == "decompose") return format_word(decompose(subject()));
    if (verb == "abelianize") return std::to_string(abelianize(subject()));
    if (verb == "tau") {
      if (o_.pair) {
        TreePair t = TreePair::parse(*o_.pair);
        return o_.factor ? format_word(factor_T(t)) : tau_inv(t).to_string();
      }
      TreePair t = tau(subject());
      return o_.factor ? format_word(factor_T(t)) : t.to_string();
    }
    if (verb == "gap") {
      GapId g = o_.gap ? GapId::parse(*o_.gap) : GapId::central();
      if (o_.transport) return format_word(transport_gap_to_center(g));
      return image_of_gap(subject(), g).to_string();
    }
    if (verb == "random") {
      Word w = random_word(o_.seed, o_.length);
      Element f = eval_word(w);
      return o_.show_word ? format_word(w) + "\n" + f.to_string() : f.to_string();
    }
    if (verb == "render") {
      RenderStyle style = o_.style == "labelled" ? RenderStyle::Labelled : RenderStyle::Plain;
      if (o_.diagram) return render_svg(ArcDiagram::parse(*o_.diagram), style);
      return render_svg(subject(), style);
    }
    throw Error(ErrorCode::Parse, verb, "unknown verb");
  }

 private:
  const std::string& input() const {
    if (!input_) input_ = trimmed(source_ ? source_() : std::string());
    return *input_;
  }

  const Options& o_;
  const InputSource& source_;
  mutable std::optional<std::string> input_;
};

void build(CLI::App& app, Options& o) {
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out_path, "Write output to this file");

  auto element_or_word = [&](CLI::App* sub) {
    auto* e = sub->add_option("--element", o.element, "Element \"[D ; R ; k]\"");
    auto* w = sub->add_option("--word", o.word, "Word such as \"a b' d\"");
    e->excludes(w);
  };

  element_or_word(app.add_subcommand("reduce", "Reduced form of an element"));
  element_or_word(app.add_subcommand("invert", "Inverse of an element"));
  // A callback per occurrence: CLI11 would split a bracketed value bound to a vector.
  app.add_subcommand("compose", "First element after the second")
      ->add_option_function<std::string>(
          "--element", [&o](const std::string& e) { o.elements.push_back(e); }, "Element, given twice")
      ->trigger_on_parse()
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  auto* ev = app.add_subcommand("eval", "Evaluate an element or word, optionally at an angle");
  element_or_word(ev);
  ev->add_option("--angle", o.angle, "Angle p/q");
  app.add_subcommand("word", "Element of a word")->add_option("--word", o.word, "Word");
  app.add_subcommand("recognize", "Membership test for a PL map")->add_option("--pl", o.pl, "Map \"x:y,...\"");
  element_or_word(app.add_subcommand("decompose", "Word in a, b, g, d for an element"));
  element_or_word(app.add_subcommand("abelianize", "Image in Z/2"));
  auto* t = app.add_subcommand("tau", "Isomorphism between rist(C) and T");
  element_or_word(t);
  t->add_option("--pair", o.pair, "Tree pair, mapped back to an element");
  t->add_flag("--factor", o.factor, "Print a word in B, G, D instead");
  auto* g = app.add_subcommand("gap", "Image of a gap, or a word carrying it to the center");
  element_or_word(g);
  g->add_option("--gap", o.gap, "\"central\" or \"behind {p/q, r/s}\"");
  g->add_flag("--transport", o.transport, "Print a transporting word");
  auto* r = app.add_subcommand("random", "Seeded random element");
  r->add_option("--seed", o.seed, "Seed");
  r->add_option("--length", o.length, "Word length");
  r->add_flag("--show-word", o.show_word, "Print the word before the element");
  auto* rd = app.add_subcommand("render", "SVG of an element or diagram");
  element_or_word(rd);
  rd->add_option("--diagram", o.diagram, "Arc diagram forest");
  rd->add_option("--style", o.style, "plain or labelled")->check(CLI::IsMember({"plain", "labelled"}));
}

}  // namespace

Result run(const std::vector<std::string>& args, const std::string& input) {
  return run(args, InputSource([&input] { return input; }));
}

Result run(const std::vector<std::string>& args, const InputSource& input) {
  Options o;
  CLI::App app{"Exact arithmetic for the Basilica Thompson group", "tb"};
  build(app, o);

  Result result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 1;
    result.err = std::string("error: ") + e.what() + "\n";
    return result;
  }

  std::string text;
  try {
    text = Dispatcher(o, input).dispatch(app.get_subcommands().front()->get_name());
  } catch (const Error& e) {
    if (is_semantic(e.code())) {
      result.exit_code = 2;
      result.out = "REJECT " + std::string(error_code_name(e.code())) + " " +
                   (e.witness().empty() ? "-" : e.witness()) + "\n";
    } else {
      result.exit_code = 1;
      result.err = "error: " + std::string(error_code_name(e.code())) + ": " + e.what() + "\n";
    }
    return result;
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.err = std::string("error: ") + e.what() + "\n";
    return result;
  }

  if (text.empty() || text.back() != '\n') text += '\n';
  if (o.out_path) {
    std::ofstream file(*o.out_path, std::ios::binary);
    if (!(file << text)) {
      result.exit_code = 1;
      result.err = "error: cannot write " + *o.out_path + "\n";
    }
    return result;
  }
  result.out = text;
  return result;
}

}  // namespace tb::cli
