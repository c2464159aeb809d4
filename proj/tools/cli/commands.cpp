#include "cli/commands.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "imbalance/irreducibility.hpp"
#include "imbalance/lattice.hpp"
#include "imbalance/oracle/oracle.hpp"
#include "imbalance/oracle/verify.hpp"
#include "imbalance/transforms.hpp"
#include "imbalance/trees.hpp"

namespace imbalance::cli {

namespace {

const std::vector<CommandInfo>& commands() {
  static const std::vector<CommandInfo> table = {
      {"validate", "check a sequence and report why it is not a path-length sequence",
       {"validate"}},
      {"info", "derived quantities of one sequence",
       {"validate", "suffix_length", "sum_components", "excess_indices", "upper_expansion",
        "lower_expansion", "contraction", "is_near_constant", "is_join_irreducible_by_balancing",
        "is_join_irreducible_by_uvw"}},
      {"sums", "exact scaled partial sums S exp l", {"scaled_partial_sums"}},
      {"compare", "imbalance order between two sequences", {"compare"}},
      {"expand", "expansion at a position, upper or lower expansion",
       {"expansion_at", "upper_expansion", "lower_expansion"}},
      {"contract", "contraction of a sequence", {"contraction"}},
      {"enumerate", "all path-length sequences with n components",
       {"enumerate", "enumerate_by_partition"}},
      {"bounds", "bottom and top of the universe of n", {"bottom", "top"}},
      {"meet", "greatest lower bound", {"meet"}},
      {"join", "least upper bound", {"join"}},
      {"hasse", "covering relation, with optional DOT / JSON export",
       {"hasse", "covering_pairs"}},
      {"bal", "excess indices and balancing steps of a sequence", {"excess_indices", "bal"}},
      {"balancing", "minimal balancing relation over the universe of n",
       {"minimal_balancing_relation"}},
      {"irreducibles", "join-irreducible elements by one or all characterizations",
       {"is_join_irreducible_bruteforce", "is_join_irreducible_by_balancing",
        "is_join_irreducible_by_uvw"}},
      {"decompose", "greedy u|v|w split and its condition verdicts",
       {"decompose_uvw", "is_near_constant"}},
      {"tree", "canonical code tree as ASCII, with optional DOT export",
       {"tree_from_sequence", "sequence_from_tree"}},
      {"code", "canonical prefix code", {"canonical_code"}},
      {"depth-count", "tree nodes at depth <= d", {"nodes_within_depth"}},
      {"verify", "run the invariant suite up to n",
       {"enumerate_by_partition", "meet_bruteforce", "join_bruteforce", "closure_equals_order"}},
  };
  return table;
}

std::string json_array(const PathLengthSequence& l) {
  return nlohmann::json(std::vector<Depth>(l.components().begin(), l.components().end())).dump();
}

std::string join_indices(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out.empty() ? "-" : out;
}

std::string join_depths(const std::vector<Depth>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out.empty() ? "()" : out;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::ParseError, "cannot open '" + path + "' for writing");
  file << contents;
}

// A failed consistency check that should exit with kExitFailure.
struct CheckFailed {};

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {
    app_.require_subcommand(1);
    app_.fallthrough();
    app_.add_option("--max-n", max_n_, "ceiling on n for whole-universe commands")
        ->capture_default_str();
    for (const CommandInfo& info : commands()) {
      CLI::App* sub = app_.add_subcommand(std::string(info.name), std::string(info.summary));
      sub->callback([this, name = info.name] { selected_ = name; });
      subs_.push_back(sub);
    }
    setup();
  }

  int run(std::span<const std::string> args) {
    std::vector<std::string> storage{"imbalance"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (std::string& s : storage) argv.push_back(s.data());
    try {
      app_.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      const int code = app_.exit(e, out_, err_);
      return code == 0 ? kExitOk : kExitUsage;
    }
    try {
      return actions_.at(std::string(selected_))();
    } catch (const CheckFailed&) {
      return kExitFailure;
    } catch (const Error& e) {
      err_ << "error: " << e.what() << '\n';
      return e.code() == ErrorCode::ParseError ? kExitUsage : kExitFailure;
    }
  }

 private:
  CLI::App* sub(std::string_view name) {
    for (CLI::App* s : subs_) {
      if (s->get_name() == name) return s;
    }
    throw std::logic_error("unregistered command");
  }

  static PathLengthSequence parse(const std::string& text) {
    return PathLengthSequence::parse(text);
  }

  void setup() {
    {
      auto* c = sub("validate");
      c->add_option("sequence", a_, "comma-separated depths")->required();
      actions_["validate"] = [this] {
        try {
          const auto l = parse(a_);
          out_ << "valid " << l.to_string() << '\n';
          return kExitOk;
        } catch (const KraftSumError& e) {
          out_ << "invalid KraftSumNotOne sum=" << e.kraft_sum().to_string()
               << " excess=" << e.excess().to_string() << '\n';
          return kExitFailure;
        } catch (const Error& e) {
          if (e.code() == ErrorCode::ParseError) throw;
          out_ << "invalid " << to_string(e.code());
          if (e.position()) out_ << " position=" << *e.position();
          out_ << '\n';
          return kExitFailure;
        }
      };
    }
    {
      auto* c = sub("info");
      c->add_option("sequence", a_)->required();
      actions_["info"] = [this] {
        const auto l = parse(a_);
        out_ << "sequence: " << l.to_string() << '\n';
        out_ << "n: " << l.size() << '\n';
        out_ << "first: " << l.first() << '\n';
        out_ << "last: " << l.last() << '\n';
        out_ << "suffix-length: " << l.suffix_length() << '\n';
        out_ << "sum: " << sum_components(l) << '\n';
        out_ << "excess-indices: " << join_indices(excess_indices(l)) << '\n';
        out_ << "upper-expansion: " << upper_expansion(l).to_string() << '\n';
        out_ << "lower-expansion: " << lower_expansion(l).to_string() << '\n';
        out_ << "contraction: " << (l.size() > 1 ? contraction(l).to_string() : "-") << '\n';
        out_ << "near-constant: " << (is_near_constant(l.components()).verdict ? "yes" : "no")
             << '\n';
        out_ << "join-irreducible: " << (is_join_irreducible_by_balancing(l) ? "yes" : "no")
             << '\n';
        if (is_join_irreducible_by_balancing(l) != is_join_irreducible_by_uvw(l)) {
          err_ << "balancing and uvw characterizations disagree\n";
          throw CheckFailed{};
        }
        return kExitOk;
      };
    }
    {
      auto* c = sub("sums");
      c->add_option("sequence", a_)->required();
      c->add_option("--scale", scale_, "exponent L of the common scale 2^L (default: last l)");
      actions_["sums"] = [this] {
        const auto l = parse(a_);
        const unsigned scale = scale_ < 0 ? l.last() : static_cast<unsigned>(scale_);
        const ScaledPartialSums s = scaled_partial_sums(l, scale);
        out_ << "scale: 2^" << s.scale_exponent << '\n';
        for (std::size_t i = 0; i < s.sums.size(); ++i) {
          out_ << (i == 0 ? "" : ",") << s.sums[i].str();
        }
        out_ << '\n';
        return kExitOk;
      };
    }
    {
      auto* c = sub("compare");
      c->add_option("first", a_)->required();
      c->add_option("second", b_)->required();
      actions_["compare"] = [this] {
        out_ << to_string(compare(parse(a_), parse(b_))) << '\n';
        return kExitOk;
      };
    }
    {
      auto* c = sub("expand");
      c->add_option("sequence", a_)->required();
      auto* at = c->add_option("--at", position_, "1-based position to split");
      auto* upper = c->add_flag("--upper", upper_, "upper expansion (default)");
      auto* lower = c->add_flag("--lower", lower_, "lower expansion");
      at->excludes(upper)->excludes(lower);
      upper->excludes(lower);
      actions_["expand"] = [this] {
        const auto l = parse(a_);
        if (position_ > 0) {
          out_ << expansion_at(l, position_).to_string() << '\n';
        } else if (lower_) {
          out_ << lower_expansion(l).to_string() << '\n';
        } else {
          out_ << upper_expansion(l).to_string() << '\n';
        }
        return kExitOk;
      };
    }
    {
      auto* c = sub("contract");
      c->add_option("sequence", a_)->required();
      actions_["contract"] = [this] {
        out_ << contraction(parse(a_)).to_string() << '\n';
        return kExitOk;
      };
    }
    {
      auto* c = sub("enumerate");
      c->add_option("n", n_)->required()->check(CLI::PositiveNumber);
      c->add_flag("--count", count_, "print only the number of elements");
      c->add_option("--format", format_, "lines or json")
          ->check(CLI::IsMember({"lines", "json"}));
      c->add_flag("--oracle", oracle_, "use the partition search instead of expansion closure");
      actions_["enumerate"] = [this] {
        const std::vector<PathLengthSequence> elements =
            oracle_ ? oracle::enumerate_by_partition(n_, max_n_) : enumerate(n_, max_n_).elements();
        if (count_) {
          out_ << elements.size() << '\n';
        } else if (format_ == "json") {
          nlohmann::ordered_json doc;
          doc["n"] = n_;
          doc["elements"] = nlohmann::json::array();
          for (const auto& l : elements) {
            doc["elements"].push_back(
                std::vector<Depth>(l.components().begin(), l.components().end()));
          }
          out_ << doc.dump() << '\n';
        } else {
          for (const auto& l : elements) out_ << l.to_string() << '\n';
        }
        return kExitOk;
      };
    }
    {
      auto* c = sub("bounds");
      c->add_option("n", n_)->required()->check(CLI::PositiveNumber);
      actions_["bounds"] = [this] {
        out_ << "bottom: " << bottom(n_).to_string() << '\n';
        out_ << "top: " << top(n_).to_string() << '\n';
        return kExitOk;
      };
    }
    {
      auto* c = sub("meet");
      c->add_option("first", a_)->required();
      c->add_option("second", b_)->required();
      actions_["meet"] = [this] {
        out_ << meet(parse(a_), parse(b_)).to_string() << '\n';
        return kExitOk;
      };
    }
    {
      auto* c = sub("join");
      c->add_option("first", a_)->required();
      c->add_option("second", b_)->required();
      actions_["join"] = [this] {
        out_ << join(parse(a_), parse(b_), max_n_).to_string() << '\n';
        return kExitOk;
      };
    }
    {
      auto* c = sub("hasse");
      c->add_option("n", n_)->required()->check(CLI::PositiveNumber);
      c->add_option("--format", format_, "stdout format: lines or json")
          ->check(CLI::IsMember({"lines", "json"}));
      c->add_option("--dot", dot_path_, "write a Graphviz DOT file");
      c->add_option("--json", json_path_, "write the Hasse JSON document");
      actions_["hasse"] = [this] {
        const LatticeUniverse h = hasse(n_, max_n_);
        if (!dot_path_.empty()) write_file(dot_path_, hasse_dot(h));
        if (!json_path_.empty()) write_file(json_path_, hasse_json(h) + "\n");
        if (format_ == "json") {
          out_ << hasse_json(h) << '\n';
        } else {
          for (const auto& [lower, upper] : covering_pairs(n_, max_n_)) {
            out_ << lower.to_string() << " <. " << upper.to_string() << '\n';
          }
        }
        return kExitOk;
      };
    }
    {
      auto* c = sub("bal");
      c->add_option("sequence", a_)->required();
      c->add_option("--index", position_, "apply only this excess index");
      actions_["bal"] = [this] {
        const auto l = parse(a_);
        if (position_ > 0) {
          out_ << bal(l, position_).to_string() << '\n';
          return kExitOk;
        }
        const auto excess = excess_indices(l);
        out_ << "excess-indices: " << join_indices(excess) << '\n';
        for (const std::size_t j : excess) out_ << j << ": " << bal(l, j).to_string() << '\n';
        return kExitOk;
      };
    }
    {
      auto* c = sub("balancing");
      c->add_option("n", n_)->required()->check(CLI::PositiveNumber);
      c->add_option("--format", format_, "lines or json")
          ->check(CLI::IsMember({"lines", "json"}));
      actions_["balancing"] = [this] {
        const auto steps = minimal_balancing_relation(n_, max_n_);
        if (format_ == "json") {
          nlohmann::ordered_json doc = nlohmann::ordered_json::array();
          for (const auto& s : steps) {
            nlohmann::ordered_json item;
            item["source"] = nlohmann::json::parse(json_array(s.source));
            item["excess_index"] = s.excess_index;
            item["target"] = nlohmann::json::parse(json_array(s.target));
            doc.push_back(std::move(item));
          }
          out_ << doc.dump() << '\n';
        } else {
          for (const auto& s : steps) {
            out_ << s.target.to_string() << " <- " << s.source.to_string()
                 << " (j=" << s.excess_index << ")\n";
          }
        }
        return kExitOk;
      };
    }
    {
      auto* c = sub("irreducibles");
      c->add_option("n", n_)->required()->check(CLI::PositiveNumber);
      c->add_option("--method", method_, "cover, balancing, uvw or all")
          ->check(CLI::IsMember({"cover", "balancing", "uvw", "all"}));
      actions_["irreducibles"] = [this] {
        const LatticeUniverse h = hasse(n_, max_n_);
        const std::string& method = method_;
        bool disagreement = false;
        for (const auto& l : h.elements()) {
          const bool by_cover = is_join_irreducible_bruteforce(l, h);
          const bool by_balancing = is_join_irreducible_by_balancing(l);
          const bool by_uvw = is_join_irreducible_by_uvw(l);
          if (method == "all") {
            if (by_cover != by_balancing || by_cover != by_uvw) {
              disagreement = true;
              err_ << "disagreement at " << l.to_string() << ": cover=" << by_cover
                   << " balancing=" << by_balancing << " uvw=" << by_uvw << '\n';
            }
            if (by_cover) out_ << l.to_string() << '\n';
            continue;
          }
          const bool verdict = method == "cover" ? by_cover : method == "balancing" ? by_balancing
                                                                                    : by_uvw;
          if (verdict) out_ << l.to_string() << '\n';
        }
        if (disagreement) throw CheckFailed{};
        return kExitOk;
      };
    }
    {
      auto* c = sub("decompose");
      c->add_option("sequence", a_)->required();
      actions_["decompose"] = [this] {
        const auto l = parse(a_);
        const UVWDecomposition d = decompose_uvw(l);
        out_ << "u: " << join_depths(d.u) << '\n';
        out_ << "v: " << join_depths(d.v) << '\n';
        out_ << "w: " << join_depths(d.w) << '\n';
        out_ << "segments-shaped: " << (d.segments_shaped ? "yes" : "no") << '\n';
        out_ << "prefix-nonempty: " << (d.prefix_nonempty ? "yes" : "no") << '\n';
        out_ << "deep-run-separated: " << (d.deep_run_separated ? "yes" : "no") << '\n';
        out_ << "join-irreducible: " << (is_join_irreducible_by_uvw(l) ? "yes" : "no") << '\n';
        return kExitOk;
      };
    }
    {
      auto* c = sub("tree");
      c->add_option("sequence", a_)->required();
      c->add_option("--style", style_, "stdout rendering: ascii or dot")
          ->check(CLI::IsMember({"ascii", "dot"}));
      c->add_option("--dot", dot_path_, "write a Graphviz DOT file");
      actions_["tree"] = [this] {
        const auto l = parse(a_);
        const CodeTree tree = tree_from_sequence(l);
        if (sequence_from_tree(tree) != l) {
          err_ << "tree does not reproduce " << l.to_string() << '\n';
          throw CheckFailed{};
        }
        if (!dot_path_.empty()) write_file(dot_path_, tree_dot(tree));
        out_ << (style_ == "dot" ? tree_dot(tree) : tree_ascii(tree));
        return kExitOk;
      };
    }
    {
      auto* c = sub("code");
      c->add_option("sequence", a_)->required();
      actions_["code"] = [this] {
        for (const std::string& word : canonical_code(parse(a_))) out_ << word << '\n';
        return kExitOk;
      };
    }
    {
      auto* c = sub("depth-count");
      c->add_option("sequence", a_)->required();
      c->add_option("depth", depth_)->required();
      actions_["depth-count"] = [this] {
        out_ << nodes_within_depth(parse(a_), depth_) << '\n';
        return kExitOk;
      };
    }
    {
      auto* c = sub("verify");
      c->add_option("n", n_)->required()->check(CLI::PositiveNumber);
      c->add_option("--property", properties_, "property name (repeatable; default all)");
      c->add_option("--format", format_, "text or json")->check(CLI::IsMember({"text", "json"}));
      c->add_flag("--list", list_, "list property names and exit");
      actions_["verify"] = [this] {
        if (list_) {
          for (const auto& info : verify::property_catalog()) {
            out_ << info.name << "  " << info.description << '\n';
          }
          return kExitOk;
        }
        if (n_ > max_n_) {
          throw Error(ErrorCode::ResourceLimit, "n = " + std::to_string(n_) +
                                                    " exceeds the ceiling " +
                                                    std::to_string(max_n_));
        }
        const auto reports = verify::run(n_, properties_);
        out_ << (format_ == "json" ? verify::format_json(reports) + "\n"
                                   : verify::format_text(reports));
        if (!verify::all_passed(reports)) throw CheckFailed{};
        return kExitOk;
      };
    }
  }

  std::ostream& out_;
  std::ostream& err_;
  CLI::App app_{"Imbalance lattice of path-length sequences of binary trees", "imbalance"};
  std::vector<CLI::App*> subs_;
  std::map<std::string, std::function<int()>> actions_;
  std::string_view selected_;

  std::size_t max_n_ = kDefaultMaxN;
  std::string a_;
  std::string b_;
  std::size_t n_ = 0;
  std::size_t position_ = 0;
  std::size_t depth_ = 0;
  long long scale_ = -1;
  bool count_ = false;
  bool upper_ = false;
  bool lower_ = false;
  bool oracle_ = false;
  bool list_ = false;
  std::string format_ = "lines";
  std::string style_ = "ascii";
  std::string method_ = "cover";
  std::string dot_path_;
  std::string json_path_;
  std::vector<std::string> properties_;
};

}  // namespace

std::span<const CommandInfo> command_table() { return commands(); }

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Cli cli(out, err);
  return cli.run(args);
}

}  // namespace imbalance::cli
