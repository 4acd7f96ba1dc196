// stid: command-line front end for the tropical identity library.
//
// Exit codes:
//   verify   0 HOLDS, 1 REFUTED, 2 TRIVIAL_PAIR
//   compose  0 written, 2 trivial composition
//   fuzz     0 PASS, 1 counterexample
//   walks    0 report written (two words: 0 no violations, 1 violations)
//   hull     0
//   search   0 at least one identity certified, 1 none
//   any      3 parse or input error, 4 limit exceeded, 5 precondition or other failure

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stid/stid.hpp"

namespace {

using namespace stid;

constexpr int kExitParse = 3;
constexpr int kExitLimit = 4;
constexpr int kExitOther = 5;

/// Input file problems, reported like parse errors.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(std::string const& out_path, std::string const& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError(out_path + ": cannot write file");
  out << text;
}

std::string sha256_hex(std::string const& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static char const* hex = "0123456789abcdef";
  std::string s;
  for (unsigned int k = 0; k < len; ++k) {
    s += hex[md[k] >> 4];
    s += hex[md[k] & 15];
  }
  return s;
}

Identity load_identity(std::string const& path) {
  auto text = read_file(path);
  try {
    return parse_identity(text);
  } catch (ParseError const& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Word word_arg(std::string const& text) {
  try {
    return parse_word(text);
  } catch (ParseError const& e) {
    throw ParseError(std::string("word argument: ") + e.what());
  }
}

struct Limits {
  std::optional<std::size_t> max_set;
  bool prune = true;

  /// --max-set wins, then STID_MAX_SET, then the library default.
  ConfigSetOptions resolve() const {
    ConfigSetOptions opt;
    opt.prune = prune;
    if (max_set) {
      opt.max_set = *max_set;
    } else if (char const* env = std::getenv("STID_MAX_SET"); env && *env) {
      std::string s(env);
      if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18)
        throw InputError("STID_MAX_SET must be a positive integer, got '" + s + "'");
      opt.max_set = std::stoull(s);
    }
    if (opt.max_set == 0) throw InputError("the set-size limit must be positive");
    return opt;
  }
};

void add_limit_flags(CLI::App* cmd, Limits& lim) {
  cmd->add_option("--max-set", lim.max_set, "Largest configuration set kept during the DP (env STID_MAX_SET)");
  cmd->add_flag("--prune,!--no-prune", lim.prune, "Keep only hull vertices between DP steps (default on)");
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string path;
  std::size_t n = 1;
  Limits limits;
  std::string out;
};

int run_verify(VerifyArgs const& a) {
  auto id = load_identity(a.path);
  auto cert = verify_trop(a.n, id, a.limits.resolve());
  write_output(a.out, format_certificate(cert));
  if (!a.out.empty()) std::cout << to_string(cert.verdict) << '\n';
  switch (cert.verdict) {
    case Verdict::Holds: return 0;
    case Verdict::Refuted: return 1;
    case Verdict::TrivialPair: return 2;
  }
  return kExitOther;
}

// ---------------------------------------------------------------------------

struct ComposeArgs {
  std::string outer;
  std::string inner;
  std::vector<std::string> certs;
  bool require_cert = false;
  std::string out;
};

struct LoadedCert {
  Certificate cert;
  std::string digest;
  std::string path;
};

int run_compose(ComposeArgs const& a) {
  auto outer = load_identity(a.outer);
  auto inner = load_identity(a.inner);
  if (a.certs.size() > 2) throw InputError("at most two certificates (outer and inner) may be given");

  auto same_pair = [](Identity const& x, Identity const& y) { return x == y || (x.u == y.v && x.v == y.u); };
  std::optional<LoadedCert> cert_outer, cert_inner;
  for (auto const& path : a.certs) {
    auto text = read_file(path);
    Certificate header = [&] {
      try {
        return parse_certificate_header(text);
      } catch (ParseError const& e) {
        throw ParseError(path + ": " + e.what());
      }
    }();
    LoadedCert lc{std::move(header), sha256_hex(text), path};
    auto matches = [&](Identity const& id) { return same_pair(lc.cert.identity, id); };
    if (matches(outer) && !cert_outer)
      cert_outer = std::move(lc);
    else if (matches(inner) && !cert_inner)
      cert_inner = std::move(lc);
    else
      throw InputError(path + ": certificate does not belong to either input identity");
  }

  // one certificate serves both roles when the inputs are the same identity
  if (same_pair(outer, inner)) {
    if (cert_outer && !cert_inner) cert_inner = cert_outer;
    if (cert_inner && !cert_outer) cert_outer = cert_inner;
  }

  std::vector<std::string> problems;
  auto check = [&](std::optional<LoadedCert> const& c, char const* role) {
    if (!c)
      problems.push_back(std::string("no certificate for the ") + role + " identity");
    else if (c->cert.verdict != Verdict::Holds)
      problems.push_back(std::string("the ") + role + " certificate " + c->path + " is " + to_string(c->cert.verdict));
  };
  check(cert_outer, "outer");
  check(cert_inner, "inner");
  if (cert_outer && cert_inner && cert_outer->cert.n != cert_inner->cert.n)
    problems.push_back("certificates are for different dimensions (" + std::to_string(cert_outer->cert.n) + " and " +
                       std::to_string(cert_inner->cert.n) + ")");
  if (!problems.empty() && a.require_cert) {
    for (auto const& p : problems) std::cerr << "stid compose: error: " << p << '\n';
    return kExitOther;
  }
  for (auto const& p : problems) std::cerr << "stid compose: warning: " << p << '\n';

  auto comp = compose_identity(outer, inner);
  if (comp.status == CompositionStatus::TrivialPair) {
    std::cerr << "stid compose: composed pair is trivial: both sides are " << comp.pair.u.str() << '\n';
    return 2;
  }

  std::vector<std::string> notes;
  notes.push_back("composed as <u[u'/v'], v[u'/v']> from outer <u,v> and inner <u',v'>");
  notes.push_back("outer: u=" + outer.u.str() + " v=" + outer.v.str());
  notes.push_back("inner: u=" + inner.u.str() + " v=" + inner.v.str());
  auto describe = [](std::optional<LoadedCert> const& c) {
    if (!c) return std::string("none");
    return "sha256 " + c->digest + " (" + to_string(c->cert.verdict) + ", n=" + std::to_string(c->cert.n) + ")";
  };
  notes.push_back("outer certificate: " + describe(cert_outer));
  notes.push_back("inner certificate: " + describe(cert_inner));
  if (problems.empty()) {
    auto lifted = lift_to_supertropical(outer, inner, cert_outer->cert, cert_inner->cert);
    auto n = std::to_string(lifted.n);
    notes.push_back("status: identity of " + n + "x" + n +
                    " supertropical matrices, composed from two certified identities of " + n + "x" + n +
                    " tropical matrices");
  } else {
    notes.push_back("status: candidate only, inputs not certified");
  }
  write_output(a.out, format_identity(comp.pair, notes));
  return 0;
}

// ---------------------------------------------------------------------------

struct FuzzArgs {
  std::string path;
  std::size_t n = 1;
  std::string kind = "st";
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  std::string check = "identity";
  std::string pair_mode = "retag";
  Limits limits;
  std::string out;
};

int run_fuzz(FuzzArgs const& a) {
  auto id = load_identity(a.path);
  if (a.trials == 0) std::cerr << "stid fuzz: warning: 0 trials, the PASS below is vacuous\n";
  FuzzResult result;
  std::string check = a.check;
  std::string kind = a.kind;
  if (a.check == "identity") {
    result = fuzz_check(a.n, id, a.kind == "trop" ? Kind::Tropical : Kind::Supertropical, a.trials, a.seed);
  } else {
    auto cert = verify_trop(a.n, id, a.limits.resolve());
    if (cert.verdict != Verdict::Holds)
      throw PreconditionError(a.check + " needs a tropical identity; verification gave " + to_string(cert.verdict));
    kind = "st";
    if (a.check == "nu-equiv") {
      result = check_lemma_nu_equiv(cert, a.trials, a.seed);
    } else {
      static std::map<std::string, PairMode> const modes{
          {"retag", PairMode::Retag}, {"same", PairMode::Same}, {"nu", PairMode::Nu}, {"hat", PairMode::Hat}};
      result = check_lemma_nu_pair(cert, a.trials, a.seed, modes.at(a.pair_mode));
      check += "/" + a.pair_mode;
    }
  }
  write_output(a.out, format_document(fuzz_to_json(result, check, a.n, id, kind)));
  if (!a.out.empty()) std::cout << (result.pass() ? "PASS" : "COUNTEREXAMPLE") << '\n';
  return result.pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct WalksArgs {
  std::string path;
  std::vector<std::string> words;
  bool list_max = false;
  std::uint64_t walk_limit = kDefaultWalkLimit;
  std::string out;
};

std::string profile_text(WalkProfile const& p) {
  if (p.count == 0) return "max -inf, walks 0";
  return "max " + to_string(p.max_weight) + ", walks " + std::to_string(p.count);
}

int run_walks(WalksArgs const& a) {
  auto text = read_file(a.path);
  DigraphFile file = [&] {
    try {
      return parse_digraph_file(text);
    } catch (ParseError const& e) {
      throw ParseError(a.path + ": " + e.what());
    }
  }();
  std::ostringstream out;
  int status = 0;
  if (a.words.size() == 1) {
    auto w = word_arg(a.words[0]);
    LwDigraph g = file.multigraph ? [&] {
      auto m = matrices_of(to_multigraph(file));
      return LwDigraph(m.first, m.second);
    }()
                                  : to_lw_digraph(file);
    out << "word: " << w.str() << '\n' << "nodes: " << g.n() << '\n';
    for (std::size_t i = 0; i < g.n(); ++i)
      for (std::size_t j = 0; j < g.n(); ++j) {
        auto walks = enumerate_max_walks(g, w, i, j, a.walk_limit);
        // the sum over all walks equals the sum over the walks of highest nu-weight
        SupertropScalar value = SupertropScalar::zero();
        for (auto const& walk : walks) value = st_add(value, walk_weight(g, walk));
        out << "entry " << i + 1 << ' ' << j + 1 << ": max " << to_string(value) << ", walks at max " << walks.size()
            << '\n';
        if (a.list_max)
          for (auto const& walk : walks) out << "  " << format_walk(walk) << "  weight " << to_string(walk_weight(g, walk)) << '\n';
      }
  } else {
    auto u = word_arg(a.words[0]);
    auto v = word_arg(a.words[1]);
    auto mg = to_multigraph(file);
    auto rep = corollary_walk_check(mg, u, v);
    out << "u: " << u.str() << '\n' << "v: " << v.str() << '\n' << "nodes: " << mg.n << ", arcs: " << mg.arcs.size()
        << '\n';
    for (std::size_t i = 0; i < mg.n; ++i)
      for (std::size_t j = 0; j < mg.n; ++j)
        out << "entry " << i + 1 << ' ' << j + 1 << ": u " << profile_text(rep.u_profiles[i][j]) << "; v "
            << profile_text(rep.v_profiles[i][j]) << '\n';
    for (auto const& vio : rep.violations)
      out << "violation at entry " << vio.i + 1 << ' ' << vio.j + 1 << ": " << to_string(vio.kind) << '\n';
    out << "violations: " << rep.violations.size() << '\n';
    status = rep.violations.empty() ? 0 : 1;
  }
  write_output(a.out, out.str());
  return status;
}

// ---------------------------------------------------------------------------

struct HullArgs {
  std::string word;
  std::size_t n = 1;
  Limits limits;
  std::string out;
};

int run_hull(HullArgs const& a) {
  auto w = word_arg(a.word);
  auto opt = a.limits.resolve();
  auto sets = config_sets(a.n, w, opt);
  std::ostringstream out;
  out << "word: " << w.str() << '\n'
      << "n: " << a.n << '\n'
      << "prune: " << (opt.prune ? "on" : "off") << '\n'
      << "coordinates: a-arcs then b-arcs, each row-major over (from, to)\n";
  for (std::size_t e = 0; e < sets.size(); ++e) {
    auto rep = vertices(sets[e]);
    out << "entry " << e / a.n + 1 << ' ' << e % a.n + 1 << ": points " << sets[e].size() << ", vertices "
        << rep.vertices.size() << ", quasi " << rep.quasi.size() << '\n';
    for (auto const& p : rep.vertices) out << "  vertex " << format_point(p) << '\n';
    for (auto const& p : rep.quasi) out << "  quasi " << format_point(p) << '\n';
  }
  write_output(a.out, out.str());
  return 0;
}

// ---------------------------------------------------------------------------

struct SearchArgs {
  std::size_t n = 1;
  std::size_t max_len = 4;
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 1;
  std::uint64_t prefilter = 16;
  Limits limits;
  std::string out;
};

int run_search(SearchArgs const& a) {
  SearchOptions opt;
  opt.n = a.n;
  opt.max_len = a.max_len;
  opt.budget = a.budget;
  opt.seed = a.seed;
  opt.prefilter_trials = a.prefilter;
  opt.sets = a.limits.resolve();
  auto res = search_identities(opt);
  std::ostringstream out;
  out << "n: " << a.n << ", max length: " << a.max_len << ", budget: " << a.budget << ", seed: " << a.seed << '\n';
  for (auto const& line : res.log) out << line << '\n';
  for (auto const& [id, cert] : res.found) out << "found: u=" << id.u.str() << " v=" << id.v.str() << '\n';
  out << "examined: " << res.examined << ", certified: " << res.found.size() << '\n';
  write_output(a.out, out.str());
  return res.found.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semigroup identities of tropical and supertropical matrices"};
  app.require_subcommand(1);

  auto positive = CLI::PositiveNumber;

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Decide whether an identity holds for n x n tropical matrices");
  verify->add_option("identity", va.path, "Identity file")->required();
  verify->add_option("--n", va.n, "Matrix size")->required()->check(positive);
  add_limit_flags(verify, va.limits);
  verify->add_option("--out", va.out, "Write the certificate here instead of stdout");

  ComposeArgs ca;
  auto* compose = app.add_subcommand("compose", "Substitute an inner identity into an outer one");
  compose->add_option("outer", ca.outer, "Outer identity file")->required();
  compose->add_option("inner", ca.inner, "Inner identity file")->required();
  compose->add_option("--cert", ca.certs, "Certificate file for an input (repeatable)");
  compose->add_flag("--require-cert", ca.require_cert, "Fail unless both inputs carry HOLDS certificates");
  compose->add_option("--out", ca.out, "Write the composed identity here instead of stdout");

  FuzzArgs fa;
  auto* fuzz = app.add_subcommand("fuzz", "Compare both sides on random matrices with exact arithmetic");
  fuzz->add_option("identity", fa.path, "Identity file")->required();
  fuzz->add_option("--n", fa.n, "Matrix size")->required()->check(positive);
  fuzz->add_option("--kind", fa.kind, "Scalar kind for plain identity checks")
      ->check(CLI::IsMember({"trop", "st"}));
  fuzz->add_option("--trials", fa.trials, "Number of random matrix pairs");
  fuzz->add_option("--seed", fa.seed, "Random seed");
  fuzz->add_option("--check", fa.check, "identity, nu-equiv or nu-pair")
      ->check(CLI::IsMember({"identity", "nu-equiv", "nu-pair"}));
  fuzz->add_option("--pair-mode", fa.pair_mode, "For nu-pair: retag, same, nu or hat")
      ->check(CLI::IsMember({"retag", "same", "nu", "hat"}));
  add_limit_flags(fuzz, fa.limits);
  fuzz->add_option("--out", fa.out, "Write the report here instead of stdout");

  WalksArgs wa;
  auto* walks = app.add_subcommand("walks", "Highest-weight walks on a labeled weighted digraph");
  walks->add_option("digraph", wa.path, "Digraph file")->required();
  walks->add_option("words", wa.words, "One word, or two words to compare")->required()->expected(1, 2);
  walks->add_flag("--list-max", wa.list_max, "List every walk of highest weight");
  walks->add_option("--walk-limit", wa.walk_limit, "Largest number of walk prefixes visited per entry");
  walks->add_option("--out", wa.out, "Write the report here instead of stdout");

  HullArgs ha;
  auto* hull = app.add_subcommand("hull", "Configuration sets of a word and their hull vertices");
  hull->add_option("word", ha.word, "Word over a, b")->required();
  hull->add_option("--n", ha.n, "Matrix size")->required()->check(positive);
  add_limit_flags(hull, ha.limits);
  hull->add_option("--out", ha.out, "Write the dump here instead of stdout");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Search content-equal word pairs for identities");
  search->add_option("--n", sa.n, "Matrix size")->required()->check(positive);
  search->add_option("--max-len", sa.max_len, "Longest word length searched")->check(CLI::Range(1, 24));
  search->add_option("--budget", sa.budget, "Largest number of candidate pairs examined");
  search->add_option("--seed", sa.seed, "Seed for the random prefilter");
  search->add_option("--prefilter", sa.prefilter, "Random trials per candidate before certification");
  add_limit_flags(search, sa.limits);
  search->add_option("--out", sa.out, "Write the log here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*verify) return run_verify(va);
    if (*compose) return run_compose(ca);
    if (*fuzz) return run_fuzz(fa);
    if (*walks) return run_walks(wa);
    if (*hull) return run_hull(ha);
    if (*search) return run_search(sa);
  } catch (ParseError const& e) {
    std::cerr << "stid: parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (InputError const& e) {
    std::cerr << "stid: " << e.what() << '\n';
    return kExitParse;
  } catch (LimitExceeded const& e) {
    std::cerr << "stid: limit exceeded: " << e.what() << '\n';
    return kExitLimit;
  } catch (PreconditionError const& e) {
    std::cerr << "stid: precondition failed: " << e.what() << '\n';
    return kExitOther;
  } catch (std::exception const& e) {
    std::cerr << "stid: error: " << e.what() << '\n';
    return kExitOther;
  }
  return kExitOther;
}
