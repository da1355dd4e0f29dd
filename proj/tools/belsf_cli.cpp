// belsf: command-line front end.  Exit codes: 0 success, 1 a check failed,
// 2 usage or input error.  Wall time is written to stderr.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "belsf/belsf.hpp"
#include "belsf/verify.hpp"

using namespace belsf;
using json = nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Report {
  json j = json::object();
  std::string text;
  int code = 0;
};

struct Opts {
  std::uint64_t q = 0;
  unsigned n = 0;
  unsigned r = 0;
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
  std::uint64_t budget = IsotopySearchOptions{}.budget;
  bool json = false;
  bool no_prune = false;
  // Inline GTF parameters.
  std::optional<std::uint64_t> c, a, b;
  std::optional<std::uint64_t> x, y;
  std::string word;
  std::vector<std::string> files;
};

using FieldPtr = std::shared_ptr<const Field>;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

FieldPtr field_from_flags(const Opts& o) {
  if (o.q == 0 || o.n == 0) throw UsageError("--q and --n are required here");
  return Field::make(o.q, o.n);
}

const std::string& file_arg(const Opts& o, std::size_t i, const char* what) {
  if (o.files.size() <= i) throw UsageError(std::string("missing input: ") + what);
  return o.files[i];
}

Elem elem_flag(const Field& F, const std::optional<std::uint64_t>& v, const char* name) {
  if (!v) throw UsageError(std::string("--") + name + " is required");
  if (*v >= F.order()) throw UsageError(std::string("--") + name + " is out of range");
  return Elem{static_cast<std::uint32_t>(*v)};
}

/// GTF from --q/--n/--c/--a/--b, or from a gtf file.
std::pair<FieldPtr, GtfParams> load_gtf(const Opts& o, std::size_t file_index = 0) {
  if (o.c) {
    auto F = field_from_flags(o);
    if (!o.a || !o.b) throw UsageError("--a and --b are required with --c");
    if (*o.a >= F->n() || *o.b >= F->n()) throw UsageError("--a and --b must lie in [0, n)");
    return {F, GtfParams{elem_flag(*F, o.c, "c"), static_cast<unsigned>(*o.a), static_cast<unsigned>(*o.b)}};
  }
  const std::string text = read_file(file_arg(o, file_index, "gtf file"));
  auto F = io::field_from_header(io::document_header(text));
  return {F, io::parse_gtf(*F, text)};
}

/// Any object with a multiplication: semifield, gtf, bel or rank2 documents,
/// or the inline specs "field" and "gtf:c,a,b" (with --q and --n).
std::pair<FieldPtr, CubicalMult> load_mult(const Opts& o, const std::string& spec) {
  if (spec == "field") {
    auto F = field_from_flags(o);
    return {F, sf::field_cubical(*F)};
  }
  if (spec.rfind("gtf:", 0) == 0) {
    auto F = field_from_flags(o);
    const auto parts = io::parse_elem_list(*F, spec.substr(4));
    if (parts.size() != 3 || parts[1].v >= F->n() || parts[2].v >= F->n()) throw UsageError("inline GTF reads gtf:c,a,b");
    return {F, gtf::to_cubical(*F, {parts[0], parts[1].v, parts[2].v})};
  }
  const std::string text = read_file(spec);
  const auto h = io::document_header(text);
  auto F = io::field_from_header(h);
  if (h.kind == "semifield") return {F, io::parse_cubical(*F, text)};
  if (h.kind == "gtf") return {F, gtf::to_cubical(*F, io::parse_gtf(*F, text))};
  if (h.kind == "bel") return {F, bel::to_cubical(*F, io::parse_bel(*F, text))};
  if (h.kind == "rank2") return {F, rank2::cubical(*F, io::parse_rank2(*F, text))};
  throw UsageError("'" + spec + "' does not describe a multiplication");
}

std::pair<FieldPtr, BelConfig> load_bel(const Opts& o, std::size_t i = 0) {
  const std::string text = read_file(file_arg(o, i, "bel file"));
  const auto h = io::document_header(text);
  auto F = io::field_from_header(h);
  if (h.kind == "rank2") return {F, rank2::to_config(*F, io::parse_rank2(*F, text))};
  return {F, io::parse_bel(*F, text)};
}

std::pair<FieldPtr, Rank2Pair> load_rank2(const Opts& o, std::size_t i = 0) {
  const std::string text = read_file(file_arg(o, i, "rank2 file"));
  auto F = io::field_from_header(io::document_header(text));
  return {F, io::parse_rank2(*F, text)};
}

json lp_json(const LinPoly& f) {
  json a = json::array();
  for (auto e : f.c) a.push_back(e.v);
  return a;
}

json cubical_json(const CubicalMult& C) {
  json rows = json::array();
  for (unsigned i = 0; i < C.n; ++i) {
    json row = json::array();
    for (unsigned j = 0; j < C.n; ++j) row.push_back(C.at(i, j).v);
    rows.push_back(row);
  }
  return rows;
}

json gtf_json(const GtfParams& P) { return {{"c", P.c.v}, {"a", P.a}, {"b", P.b}}; }

json bel_json(const BelConfig& B) {
  json f = json::array(), g = json::array();
  for (const auto& x : B.f) f.push_back(lp_json(x));
  for (const auto& x : B.g) g.push_back(lp_json(x));
  return {{"r", B.r}, {"f", f}, {"g", g}};
}

json nuclei_json(const sf::Nuclei& N) {
  return {{"left", N.left}, {"middle", N.middle}, {"right", N.right}, {"centre", N.centre}};
}

std::string tf(bool b) { return b ? "true" : "false"; }

void add_field(Report& R, const Field& F) {
  R.j["q"] = F.q();
  R.j["n"] = F.n();
}

// ---- gtf ----

Report gtf_build(const Opts& o, const std::string& emit) {
  auto [F, P] = load_gtf(o);
  Report R;
  add_field(R, *F);
  R.j["gtf"] = gtf_json(P);
  const bool ok = gtf::valid(*F, P);
  R.j["valid"] = ok;
  R.j["proper"] = gtf::proper(P);
  if (!ok) {
    R.text = "valid: false\n";
    R.code = 1;
    return R;
  }
  if (emit == "semifield") R.text = io::format_cubical(*F, gtf::to_cubical(*F, P));
  else if (emit == "bel") R.text = io::format_bel(*F, rank2::gtf_config(*F, P));
  else if (emit == "rank2") R.text = io::format_rank2(*F, rank2::gtf_pair(*F, P));
  else R.text = io::format_gtf(*F, P);
  R.j["cubical"] = cubical_json(gtf::to_cubical(*F, P));
  return R;
}

Report gtf_knuth(const Opts& o) {
  auto [F, P] = load_gtf(o);
  Report R;
  add_field(R, *F);
  std::vector<KnuthWord> words;
  if (o.word.empty() || o.word == "all") words.assign(std::begin(kAllKnuthWords), std::end(kAllKnuthWords));
  else words.push_back(parse_knuth_word(o.word));
  for (auto w : words) {
    const GtfParams K = gtf::knuth(*F, P, w);
    R.j["results"][std::string(to_string(w))] = gtf_json(K);
    if (words.size() > 1) R.text += "# " + std::string(to_string(w)) + "\n";
    R.text += io::format_gtf(*F, K);
  }
  return R;
}

Report gtf_isotopic(const Opts& o, bool bruteforce) {
  FieldPtr F;
  GtfParams P, P2;
  if (o.files.size() >= 2) {
    std::tie(F, P) = load_gtf(Opts{.files = o.files}, 0);
    FieldPtr F2;
    std::tie(F2, P2) = load_gtf(Opts{.files = o.files}, 1);
    if (F2->order() != F->order() || F2->q() != F->q()) throw UsageError("GTFs live over different fields");
  } else {
    throw UsageError("gtf isotopic takes two gtf files");
  }
  Report R;
  add_field(R, *F);
  const bool iso_closed = gtf::isotopic(*F, P, P2);
  R.j["isotopic"] = iso_closed;
  R.text = "isotopic: " + tf(iso_closed) + "\n";
  if (bruteforce) {
    IsotopySearchOptions opt{o.budget, !o.no_prune, o.jobs};
    const auto w = iso::isotopic_bruteforce(*F, gtf::to_cubical(*F, P), gtf::to_cubical(*F, P2), opt);
    R.j["bruteforce"] = w.has_value();
    R.text += "bruteforce: " + tf(w.has_value()) + "\n";
    if (w.has_value() != iso_closed) {
      R.text += "agreement: false\n";
      R.code = 1;
    }
  }
  return R;
}

// ---- semifield ----

Report semifield_cmd(const Opts& o, const std::string& cmd) {
  auto [F, C] = load_mult(o, file_arg(o, 0, "semifield"));
  Report R;
  add_field(R, *F);
  if (cmd == "mult") {
    const Elem x = elem_flag(*F, o.x, "x"), y = elem_flag(*F, o.y, "y");
    const Elem p = sf::mult(*F, C, x, y);
    R.j["product"] = p.v;
    R.text = io::format_elem(p) + "\n";
  } else if (cmd == "check") {
    const bool ok = sf::is_presemifield(*F, C, o.jobs);
    R.j["presemifield"] = ok;
    R.text = "presemifield: " + tf(ok) + "\n";
    R.code = ok ? 0 : 1;
  } else if (cmd == "nuclei") {
    const auto N = sf::nuclei(*F, C);
    R.j["nuclei"] = nuclei_json(N);
    R.text = "left: " + std::to_string(N.left) + "\nmiddle: " + std::to_string(N.middle) + "\nright: " + std::to_string(N.right) +
             "\ncentre: " + std::to_string(N.centre) + "\n";
  } else if (cmd == "knuth") {
    const CubicalMult K = sf::knuth(*F, C, parse_knuth_word(o.word.empty() ? "id" : o.word), o.jobs);
    R.j["cubical"] = cubical_json(K);
    R.text = io::format_cubical(*F, K);
  } else if (cmd == "spread") {
    if (!sf::is_presemifield(*F, C, o.jobs)) throw ValidityError("spread: input is not a presemifield");
    const auto S = sf::spread_of(*F, C);
    const bool ok = sf::is_spread(*F, S);
    json members = json::array();
    R.text = "# graphs of x -> S(x, y), one per y, plus the member {(0, z)}\n";
    for (const auto& g : S.graphs) {
      members.push_back(lp_json(g));
      R.text += io::format_linpoly(g) + "\n";
    }
    R.j["members"] = members;
    R.j["spread"] = ok;
    R.text += "members: " + std::to_string(S.graphs.size() + (S.has_infinity ? 1 : 0)) + "\nspread: " + tf(ok) + "\n";
    R.code = ok ? 0 : 1;
  }
  return R;
}

// ---- bel ----

Report bel_cmd(const Opts& o, const std::string& cmd) {
  Report R;
  if (cmd == "symplectic") {
    auto [F, C] = load_mult(o, file_arg(o, 0, "symmetric semifield array"));
    add_field(R, *F);
    const auto res = bel::symplectic_config(*F, C);
    json vs = json::array();
    R.text = "# rank-one vectors\n";
    for (const auto& v : res.vectors) {
      json row = json::array();
      std::string line;
      for (std::size_t i = 0; i < v.size(); ++i) {
        row.push_back(v[i].v);
        line += (i ? "," : "") + std::to_string(v[i].v);
      }
      vs.push_back(row);
      R.text += "# " + line + "\n";
    }
    R.j["vectors"] = vs;
    R.j["config"] = bel_json(res.config);
    R.text += io::format_bel(*F, res.config);
    return R;
  }
  auto [F, B] = load_bel(o);
  add_field(R, *F);
  if (cmd == "check") {
    const bool dims = bel::dims_ok(*F, B);
    R.j["dims"] = dims;
    if (!dims) {
      R.text = "dims: false\nbel: false\n";
      R.j["bel"] = false;
      R.code = 1;
      return R;
    }
    const auto P = bel::properties(*F, B);
    R.j["bel"] = P.zero_divisor_free;
    R.j["conditions"] = {P.zero_divisor_free, P.spread_sets_disjoint, P.U_avoids_BW, P.W_avoids_BU, P.no_multiples};
    R.j["agree"] = P.all_agree();
    R.text = "dims: true\nbel: " + tf(P.zero_divisor_free) + "\nconditions agree: " + tf(P.all_agree()) + "\n";
    R.code = P.zero_divisor_free && P.all_agree() ? 0 : 1;
  } else if (cmd == "mult") {
    bel::require_dims(*F, B);
    const Elem p = bel::mult(*F, B, elem_flag(*F, o.x, "x"), elem_flag(*F, o.y, "y"));
    R.j["product"] = p.v;
    R.text = io::format_elem(p) + "\n";
  } else if (cmd == "cubical") {
    const CubicalMult C = bel::to_cubical(*F, B);
    R.j["cubical"] = cubical_json(C);
    R.text = io::format_cubical(*F, C);
  } else if (cmd == "spread") {
    const auto S = bel::spread(*F, B);
    json members = json::array();
    R.text = "# graphs of y -> S(x, y), one per x, plus the member {(0, z)}\n";
    for (const auto& g : S.graphs) {
      members.push_back(lp_json(g));
      R.text += io::format_linpoly(g) + "\n";
    }
    const bool ok = sf::is_spread(*F, S);
    R.j["members"] = members;
    R.j["spread"] = ok;
    R.text += "members: " + std::to_string(S.graphs.size() + (S.has_infinity ? 1 : 0)) + "\nspread: " + tf(ok) + "\n";
    R.code = ok ? 0 : 1;
  } else if (cmd == "reduce") {
    const BelConfig Rd = bel::reduce_r(*F, B);
    R.j["config"] = bel_json(Rd);
    R.text = io::format_bel(*F, Rd);
  } else if (cmd == "transpose") {
    const BelConfig T = bel::perp_transpose(*F, B);
    R.j["config"] = bel_json(T);
    R.text = io::format_bel(*F, T);
  }
  return R;
}

// ---- rank2 ----

void describe_pair(Report& R, const Field& F, const Rank2Pair& P, const std::string& key) {
  R.j[key] = {{"a", lp_json(P.a)}, {"b", lp_json(P.b)}};
  if (auto g = rank2::gtf_from_cubical(F, rank2::cubical(F, P)); g && gtf::valid(F, *g)) R.j[key]["gtf"] = gtf_json(*g);
}

Report rank2_cmd(const Opts& o, const std::string& cmd) {
  Report R;
  if (cmd == "normalize") {
    auto [F, B] = load_bel(o);
    add_field(R, *F);
    const auto res = rank2::normalize(*F, B);
    describe_pair(R, *F, res.pair, "pair");
    R.j["identity_move"] = res.identity_move;
    R.text = io::format_rank2(*F, res.pair);
    return R;
  }
  if (cmd == "stab") {
    const auto [F, P] = load_gtf(o, 0);
    add_field(R, *F);
    const std::size_t base = o.c ? 0 : 1;
    const StabElement phi = io::parse_stab(*F, read_file(file_arg(o, base, "stab file for U")));
    const StabElement phi2 = o.files.size() > base + 1 ? io::parse_stab(*F, read_file(o.files[base + 1])) : StabElement{};
    const GtfParams out = rank2::stab_apply(*F, P, phi, phi2);
    const Rank2Pair direct = rank2::stab_oracle(*F, P, phi, phi2);
    const bool agree = rank2::cubical(*F, direct) == gtf::to_cubical(*F, out);
    R.j["gtf"] = gtf_json(out);
    R.j["agrees_with_direct"] = agree;
    R.text = io::format_gtf(*F, out) + "agrees with direct transformation: " + tf(agree) + "\n";
    R.code = agree ? 0 : 1;
    return R;
  }
  auto [F, P] = load_rank2(o);
  add_field(R, *F);
  if (cmd == "s" || cmd == "e" || cmd == "t") {
    const Rank2Pair Q = cmd == "s" ? rank2::op_s(*F, P) : cmd == "e" ? rank2::op_e(*F, P) : rank2::op_t(*F, P);
    describe_pair(R, *F, Q, "pair");
    R.text = io::format_rank2(*F, Q);
  } else if (cmd == "orbit8") {
    const auto orbit = rank2::orbit8(*F, P);
    for (const auto& e : orbit) {
      describe_pair(R, *F, e.pair, e.word);
      R.text += "# " + e.word + "\n" + io::format_rank2(*F, e.pair);
    }
    R.j["distinct"] = rank2::distinct_pairs(orbit);
    R.text += "distinct pairs: " + std::to_string(rank2::distinct_pairs(orbit)) + "\n";
  } else if (cmd == "table24") {
    rank2::require_bel(*F, P);
    bool all = true;
    for (auto row : kAllKnuthWords)
      for (auto col : rank2::kTableColumns) {
        const CubicalMult cell = rank2::table_cell(*F, P, row, col);
        const bool match = cell == rank2::table_closed_form(*F, P, row, col);
        const bool printed = cell == rank2::table_printed_variant(*F, P, row, col);
        all = all && match;
        const std::string key = std::string(to_string(row)) + "/" + std::string(col);
        R.j["cells"][key] = {{"closed_form", match}, {"as_printed", printed}, {"cubical", cubical_json(cell)}};
        R.text += key + ": closed form " + tf(match) + ", as printed " + tf(printed) + "\n";
      }
    R.j["all_match"] = all;
    R.text += "all closed forms match: " + tf(all) + "\n";
    R.code = all ? 0 : 1;
  }
  return R;
}

// ---- iso ----

Report iso_cmd(const Opts& o, const std::string& cmd) {
  Report R;
  if (cmd == "invariants") {
    auto [F, C] = load_mult(o, file_arg(o, 0, "semifield"));
    add_field(R, *F);
    const auto I = iso::invariants(*F, C);
    R.j["nuclei"] = nuclei_json(I.nuclei);
    R.text = "q: " + std::to_string(I.q) + "\nn: " + std::to_string(I.n) + "\nleft: " + std::to_string(I.nuclei.left) +
             "\nmiddle: " + std::to_string(I.nuclei.middle) + "\nright: " + std::to_string(I.nuclei.right) +
             "\ncentre: " + std::to_string(I.nuclei.centre) + "\n";
    return R;
  }
  auto [F, A] = load_mult(o, file_arg(o, 0, "first semifield"));
  auto [F2, B] = load_mult(o, file_arg(o, 1, "second semifield"));
  if (F->q() != F2->q() || F->n() != F2->n()) throw UsageError("inputs live over different fields");
  add_field(R, *F);
  IsotopySearchOptions opt{o.budget, !o.no_prune, o.jobs};
  const auto w = iso::isotopic_bruteforce(*F, A, B, opt);
  R.j["isotopic"] = w.has_value();
  R.text = "isotopic: " + tf(w.has_value()) + "\n";
  if (w) {
    R.j["isotopism"] = {{"A", lp_json(w->A)}, {"B", lp_json(w->B)}, {"C", lp_json(w->C)}};
    R.text += io::format_isotopism(*F, *w);
  }
  return R;
}

// ---- verify ----

Report verify_all(const Opts& o) {
  Report R;
  int failures = 0;
  json arr = json::array();
  for (const auto& c : verify::criteria()) {
    const auto r = verify::run(c, o.seed, o.jobs);
    failures += r.pass() ? 0 : 1;
    arr.push_back({{"id", r.id},
                   {"name", r.name},
                   {"pass", r.pass()},
                   {"checks_ok", r.checks_ok},
                   {"detail", r.detail},
                   {"limit_seconds", r.limit_seconds}});
    R.text += verify::format_line(r) + "\n";
    std::fprintf(stderr, "criterion %d: %.3fs\n", r.id, r.seconds);
  }
  R.j["criteria"] = arr;
  R.j["passed"] = 12 - failures;
  R.text += std::to_string(12 - failures) + "/12 criteria passed\n";
  R.code = failures == 0 ? 0 : 1;
  return R;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite presemifields, BEL-configurations and isotopy"};
  app.require_subcommand(1);
  app.fallthrough();
  Opts o;
  app.add_option("--q", o.q, "base field order");
  app.add_option("--n", o.n, "extension degree");
  app.add_option("--r", o.r, "configuration length");
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
  app.add_option("--budget", o.budget, "largest q^n for exhaustive isotopy search")->capture_default_str();
  app.add_flag("--json", o.json, "machine-readable output");

  std::string emit = "gtf";
  bool bruteforce = false;
  std::string selected;

  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help) {
    auto* s = group->add_subcommand(name, help);
    s->fallthrough();
    s->add_option("inputs", o.files, "input files or inline specs");
    s->callback([&selected, group, name] { selected = group->get_name() + " " + name; });
    return s;
  };
  auto gtf_flags = [&](CLI::App* s) {
    s->add_option("--c", o.c, "GTF constant c (encoding)");
    s->add_option("--a", o.a, "alpha = x^(q^a)");
    s->add_option("--b", o.b, "beta = x^(q^b)");
  };
  auto xy_flags = [&](CLI::App* s) {
    s->add_option("--x", o.x, "left operand");
    s->add_option("--y", o.y, "right operand");
  };

  auto* g = app.add_subcommand("gtf", "generalized twisted fields");
  g->require_subcommand(1);
  g->fallthrough();
  auto* gb = leaf(g, "build", "validate parameters and emit an object");
  gtf_flags(gb);
  gb->add_option("--emit", emit, "gtf | semifield | bel | rank2")->check(CLI::IsMember({"gtf", "semifield", "bel", "rank2"}));
  auto* gk = leaf(g, "knuth", "Knuth derivative parameters");
  gtf_flags(gk);
  gk->add_option("--word", o.word, "id, t, d, td, dt, dtd or all");
  auto* gi = leaf(g, "isotopic", "closed-form isotopy test of two GTF files");
  gi->add_flag("--bruteforce", bruteforce, "cross-check with exhaustive search");
  gi->add_flag("--no-prune", o.no_prune, "disable invariant pruning");

  auto* s = app.add_subcommand("semifield", "presemifields given by cubical arrays");
  s->require_subcommand(1);
  s->fallthrough();
  xy_flags(leaf(s, "mult", "evaluate x * y"));
  leaf(s, "check", "presemifield test");
  leaf(s, "nuclei", "nucleus orders of the unitalization");
  leaf(s, "knuth", "Knuth derivative")->add_option("--word", o.word, "id, t, d, td, dt, dtd");
  leaf(s, "spread", "spread set and exact-cover check");

  auto* b = app.add_subcommand("bel", "BEL-configurations");
  b->require_subcommand(1);
  b->fallthrough();
  leaf(b, "check", "dimension and BEL conditions");
  xy_flags(leaf(b, "mult", "evaluate the multiplication"));
  leaf(b, "cubical", "convert to a cubical array");
  leaf(b, "spread", "spread of the configuration");
  leaf(b, "reduce", "drop one coordinate");
  leaf(b, "transpose", "perp-transpose");
  leaf(b, "symplectic", "configuration (f, f^) from a symmetric array");

  auto* r2 = app.add_subcommand("rank2", "r = 2 configurations");
  r2->require_subcommand(1);
  r2->fallthrough();
  leaf(r2, "normalize", "bring f_1 = g_1 = identity");
  leaf(r2, "s", "switch a and b");
  leaf(r2, "e", "replace a by its adjoint");
  leaf(r2, "t", "transpose");
  leaf(r2, "orbit8", "orbit under the group of order 8");
  gtf_flags(leaf(r2, "stab", "apply stabilizer elements to a GTF"));
  leaf(r2, "table24", "the 6 x 4 multiplication table");

  auto* is = app.add_subcommand("iso", "isotopy");
  is->require_subcommand(1);
  is->fallthrough();
  leaf(is, "test", "exhaustive isotopy search")->add_flag("--no-prune", o.no_prune, "disable invariant pruning");
  leaf(is, "invariants", "isotopy invariants");

  auto* v = app.add_subcommand("verify", "acceptance suite");
  v->require_subcommand(1);
  v->fallthrough();
  leaf(v, "all", "run every acceptance check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (o.jobs == 0) o.jobs = std::max(1u, std::thread::hardware_concurrency());

  const auto t0 = std::chrono::steady_clock::now();
  Report R;
  int code = 0;
  try {
    const auto sp = selected.find(' ');
    const std::string grp = selected.substr(0, sp), cmd = selected.substr(sp + 1);
    if (grp == "gtf") {
      if (cmd == "build") R = gtf_build(o, emit);
      else if (cmd == "knuth") R = gtf_knuth(o);
      else R = gtf_isotopic(o, bruteforce);
    } else if (grp == "semifield") {
      R = semifield_cmd(o, cmd);
    } else if (grp == "bel") {
      R = bel_cmd(o, cmd);
    } else if (grp == "rank2") {
      R = rank2_cmd(o, cmd);
    } else if (grp == "iso") {
      R = iso_cmd(o, cmd);
    } else {
      R = verify_all(o);
    }
    code = R.code;
    if (o.json) {
      R.j["exit"] = code;
      std::cout << R.j.dump(2) << "\n";
    } else {
      std::cout << R.text;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    code = 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    code = 2;
  } catch (const DimensionError& e) {
    std::cerr << "dimension: " << e.what() << "\n";
    code = 1;
  } catch (const ValidityError& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    code = 1;
  } catch (const NotReducibleError& e) {
    std::cerr << "not reducible: " << e.what() << "\n";
    code = 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 2;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::fprintf(stderr, "time: %.3fs\n", secs);
  return code;
}
