#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schubert/bpd.hpp"
#include "schubert/common.hpp"
#include "schubert/growth.hpp"
#include "schubert/insertion.hpp"
#include "schubert/moves.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

namespace {

using namespace schubert;
using nlohmann::json;

int max_group_size() {
  const char* env = std::getenv("SCHUBERT_MAX_N");
  if (!env || !*env) return 8;
  try {
    const int n = std::stoi(env);
    if (n < 1) throw input_error("SCHUBERT_MAX_N must be positive");
    return n;
  } catch (const input_error&) {
    throw;
  } catch (const std::exception&) {
    throw input_error("bad SCHUBERT_MAX_N value");
  }
}

Permutation parse_perm_capped(const std::string& text) {
  Permutation p = Permutation::parse(text);
  const int cap = max_group_size();
  if (p.size() > cap)
    throw input_error("permutation support " + std::to_string(p.size()) +
                      " exceeds SCHUBERT_MAX_N = " + std::to_string(cap));
  return p;
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream f(path);
  if (!f) throw input_error("cannot open file: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

BpdGrid read_grid(const std::string& path) {
  std::string text = read_text(path);
  while (!text.empty() && text.back() == '\n') text.pop_back();
  return BpdGrid::parse(text);
}

Polynomial schubert_by_bpd(const Permutation& p) {
  Polynomial sum;
  for (const auto& g : enumerate_bpds(p)) sum += weight(g);
  return sum;
}

void cmd_schubert(const std::string& perm, const std::string& method, bool no_verify) {
  const Permutation p = parse_perm_capped(perm);
  if (method != "bpd" && method != "ddiff") throw input_error("unknown method: " + method);
  Polynomial out = method == "bpd" ? schubert_by_bpd(p) : schubert_oracle(p);
  if (!no_verify) {
    const Polynomial other = method == "bpd" ? schubert_oracle(p) : schubert_by_bpd(p);
    if (out != other) throw internal_error("bpd and ddiff methods disagree for " + p.str());
  }
  std::cout << out.str() << '\n';
}

void cmd_bpds(const std::string& perm, bool count_only) {
  const Permutation p = parse_perm_capped(perm);
  const auto all = enumerate_bpds(p);
  if (count_only) {
    std::cout << all.size() << '\n';
    return;
  }
  for (size_t i = 0; i < all.size(); ++i) {
    if (i) std::cout << '\n';
    std::cout << all[i].render() << '\n';
  }
}

void cmd_rsk(bool left, const std::string& biword) {
  const Biword q = Biword::parse(biword);
  const int cap = max_group_size();
  for (const auto& bl : q.letters)
    if (bl.k + 1 > cap)
      throw input_error("biletter " + bl.str() + " exceeds SCHUBERT_MAX_N = " + std::to_string(cap));
  const auto [grid, chain] = left ? rsk_left(q) : rsk_right(q);
  std::cout << grid.render() << '\n' << chain.str() << '\n';
}

void cmd_unrsk(bool left, const std::string& gridfile, const std::string& chain_text) {
  const BpdGrid g = read_grid(gridfile);
  const MixedChain chain = MixedChain::parse(chain_text);
  const Biword q = left ? unrsk_left(g, chain) : unrsk_right(g, chain);
  std::cout << q.str() << '\n';
}

void cmd_insert(bool left, const std::string& gridfile, const std::string& biletter, bool trace) {
  const BpdGrid g = read_grid(gridfile);
  if (auto v = validate(g))
    throw input_error("invalid grid at (" + std::to_string(v->row) + "," + std::to_string(v->col) +
                      "): " + v->message);
  const Biletter bl = Biletter::parse(biletter);
  InsertionTrace tr;
  const BpdGrid out = left ? left_insert(g, bl, trace ? &tr : nullptr)
                           : right_insert(g, bl, trace ? &tr : nullptr);
  // Cheap postconditions of the insertion theorems.
  const Permutation before = perm_of(g), after = perm_of(out);
  if (!is_k_cover(before, after, bl.k))
    throw internal_error("insertion output is not a k-Bruhat cover");
  if (weight(out) != weight(g) * Polynomial::var(bl.b))
    throw internal_error("insertion did not multiply the weight by x_b");
  if (trace) std::cout << render_trace(tr);
  std::cout << out.render() << '\n';
}

void cmd_lr(const std::string& w_text, const std::string& v_text, bool as_json, bool no_verify) {
  const Permutation w = parse_perm_capped(w_text), v = parse_perm_capped(v_text);
  const auto counts = structure_constants_separated(w, v, !no_verify);
  if (as_json) {
    json constants = json::object();
    for (auto& [u, c] : counts) constants[u.str()] = std::stoll(c.str());
    json out = {{"w", w.str()},
                {"v", v.str()},
                {"constants", constants},
                {"verified_against_oracle", !no_verify}};
    std::cout << out.dump() << '\n';
  } else {
    for (auto& [u, c] : counts) std::cout << u.str() << ' ' << c.str() << '\n';
  }
}

void cmd_growth(const std::string& bottom, const std::string& right) {
  const GrowthDiagram G = fill_growth(MixedChain::parse(bottom), MixedChain::parse(right));
  std::cout << G.render_tsv();
}

void cmd_jdt(const std::string& c_text, const std::string& d_text) {
  std::cout << jdt(MixedChain::parse(c_text), MixedChain::parse(d_text)).str() << '\n';
}

void cmd_chains(bool up, const std::string& perm) {
  const Permutation p = parse_perm_capped(perm);
  std::cout << (up ? up_chain(p) : down_chain(p)).str() << '\n';
}

int parse_group(const std::string& g) {
  if (g.size() < 2 || (g[0] != 'S' && g[0] != 's'))
    throw input_error("group must look like S4");
  int n = 0;
  try {
    n = std::stoi(g.substr(1));
  } catch (const std::exception&) {
    throw input_error("group must look like S4");
  }
  if (n < 1 || n > max_group_size())
    throw input_error("group size out of range (SCHUBERT_MAX_N = " +
                      std::to_string(max_group_size()) + ")");
  return n;
}

void check_monk(int n) {
  long long verified = 0;
  for (const auto& p : symmetric_group(n)) {
    const auto bpds = enumerate_bpds(p);
    for (int k = 1; k <= n; ++k) {
      const auto covers = k_covers_up(p, k, std::max(p.size(), k) + 1);
      const auto expansion = monk_product(p, k);
      if (expansion.size() != covers.size())
        throw internal_error("Monk expansion support mismatch for " + p.str());
      for (auto& [u, c] : expansion)
        if (c != 1 || !covers.contains(u))
          throw internal_error("Monk expansion term mismatch for " + p.str());
      for (const bool left : {true, false}) {
        std::map<BpdGrid, std::pair<Permutation, int>> image;
        for (const auto& D : bpds) {
          for (int b = 1; b <= k; ++b) {
            const BpdGrid E = left ? left_insert(D, Biletter(b, k)) : right_insert(D, Biletter(b, k));
            const Permutation rho = perm_of(E);
            if (!covers.contains(rho))
              throw internal_error("insertion left the Monk cover set for " + p.str());
            if (weight(E) != weight(D) * Polynomial::var(b))
              throw internal_error("insertion weight mismatch for " + p.str());
            if (!image.emplace(E, std::make_pair(rho, b)).second)
              throw internal_error("insertion is not injective for " + p.str());
            ++verified;
          }
        }
        size_t target = 0;
        for (const auto& rho : covers) target += enumerate_bpds(rho).size();
        if (image.size() != target)
          throw internal_error("insertion is not surjective for " + p.str());
      }
    }
  }
  std::cout << "OK monk group=S" << n << " verified_insertions=" << verified << '\n';
}

void check_comm(int n) {
  long long verified = 0;
  for (const auto& p : symmetric_group(n)) {
    const auto d1 = p.first_descent();
    const auto d2 = p.last_descent();
    const int lo_k = d2 ? *d2 : 1;
    const auto bpds = enumerate_bpds(p);
    for (int k = lo_k; k <= n; ++k) {
      const int hi_l = d1 ? std::min(*d1, k) : k;
      for (int l = 1; l <= hi_l; ++l) {
        for (int x = 1; x <= k; ++x) {
          for (int y = 1; y <= l; ++y) {
            for (const auto& D : bpds) {
              if (!check_commutes(D, Biletter(x, k), Biletter(y, l)))
                throw internal_error("insertions fail to commute for " + p.str() + " x=" +
                                     Biletter(x, k).str() + " y=" + Biletter(y, l).str());
              ++verified;
            }
          }
        }
      }
    }
  }
  std::cout << "OK comm group=S" << n << " verified_pairs=" << verified << '\n';
}

void check_rsk_fibers(int n, unsigned seed) {
  std::mt19937 rng(seed);
  const int kmax = std::max(2, n - 1);
  std::uniform_int_distribution<int> len_dist(0, 6), k_dist(1, kmax);
  long long verified = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    Biword q;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
      const int k = k_dist(rng);
      q.letters.emplace_back(std::uniform_int_distribution<int>(1, k)(rng), k);
    }
    const auto [gl, cl] = rsk_left(q);
    if (unrsk_left(gl, cl) != q) throw internal_error("left RSK roundtrip failed on " + q.str());
    const auto [gr, cr] = rsk_right(q);
    if (unrsk_right(gr, cr) != q) throw internal_error("right RSK roundtrip failed on " + q.str());
    verified += 2;
  }
  std::cout << "OK rsk-fibers max_k=" << kmax << " verified_roundtrips=" << verified << '\n';
}

void check_oracle(int n) {
  for (const auto& p : symmetric_group(n)) {
    if (schubert_by_bpd(p) != schubert_oracle(p))
      throw internal_error("BPD weight sum disagrees with the oracle for " + p.str());
  }
  std::cout << "OK oracle group=S" << n << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of bumpless pipe dreams: Schubert polynomials, "
               "insertion, growth diagrams, and structure constants"};
  app.require_subcommand(1);

  std::string perm, method = "ddiff", biword, gridfile, biletter, chain_text;
  std::string w_text, v_text, bottom, right, c_text, d_text, group = "S4", suite;
  bool no_verify = false, count_only = false, left = false, right_flag = false;
  bool trace = false, as_json = false, up = false, down = false;
  unsigned seed = 1;

  auto* sc_schubert = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
  sc_schubert->add_option("perm", perm)->required();
  sc_schubert->add_option("--method", method)->check(CLI::IsMember({"bpd", "ddiff"}));
  sc_schubert->add_flag("--no-verify", no_verify);

  auto* sc_bpds = app.add_subcommand("bpds", "Enumerate bumpless pipe dreams");
  sc_bpds->add_option("perm", perm)->required();
  sc_bpds->add_flag("--count", count_only);
  bool render = false;
  sc_bpds->add_flag("--render", render);

  auto* sc_rsk = app.add_subcommand("rsk", "Biword RSK into a pipe dream with recording chain");
  sc_rsk->add_option("biword", biword);
  sc_rsk->add_flag("--left", left);
  sc_rsk->add_flag("--right", right_flag);

  auto* sc_unrsk = app.add_subcommand("unrsk", "Invert RSK from a grid and recording chain");
  sc_unrsk->add_option("gridfile", gridfile)->required();
  sc_unrsk->add_option("--chain", chain_text)->required();
  sc_unrsk->add_flag("--left", left);
  sc_unrsk->add_flag("--right", right_flag);

  auto* sc_insert = app.add_subcommand("insert", "Insert one biletter into a grid");
  sc_insert->add_option("gridfile", gridfile)->required();
  sc_insert->add_option("biletter", biletter)->required();
  sc_insert->add_flag("--left", left);
  sc_insert->add_flag("--right", right_flag);
  sc_insert->add_flag("--trace", trace);

  auto* sc_lr = app.add_subcommand("lr", "Separated-descent Schubert structure constants");
  sc_lr->add_option("w", w_text)->required();
  sc_lr->add_option("v", v_text)->required();
  sc_lr->add_flag("--json", as_json);
  sc_lr->add_flag("--no-verify", no_verify);

  auto* sc_growth = app.add_subcommand("growth", "Fill a growth diagram from two chains");
  sc_growth->add_option("--bottom", bottom)->required();
  sc_growth->add_option("--right", right)->required();

  auto* sc_jdt = app.add_subcommand("jdt", "Jeu de taquin of chains");
  sc_jdt->add_option("--c", c_text)->required();
  sc_jdt->add_option("--d", d_text)->required();

  auto* sc_chains = app.add_subcommand("chains", "Canonical up/down chain of a permutation");
  sc_chains->add_option("perm", perm)->required();
  sc_chains->add_flag("--up", up);
  sc_chains->add_flag("--down", down);

  auto* sc_check = app.add_subcommand("check", "Run a property suite");
  sc_check->add_option("suite", suite)->required()->check(
      CLI::IsMember({"monk", "comm", "rsk-fibers", "oracle"}));
  sc_check->add_option("--group", group);
  sc_check->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    auto pick_side = [&](bool dflt_left) {
      if (left && right_flag) throw input_error("choose exactly one of --left/--right");
      if (!left && !right_flag) return dflt_left;
      return left;
    };
    if (sc_schubert->parsed()) {
      cmd_schubert(perm, method, no_verify);
    } else if (sc_bpds->parsed()) {
      if (count_only && render) throw input_error("choose one of --count/--render");
      cmd_bpds(perm, count_only);
    } else if (sc_rsk->parsed()) {
      cmd_rsk(pick_side(true), biword);
    } else if (sc_unrsk->parsed()) {
      cmd_unrsk(pick_side(true), gridfile, chain_text);
    } else if (sc_insert->parsed()) {
      cmd_insert(pick_side(true), gridfile, biletter, trace);
    } else if (sc_lr->parsed()) {
      cmd_lr(w_text, v_text, as_json, no_verify);
    } else if (sc_growth->parsed()) {
      cmd_growth(bottom, right);
    } else if (sc_jdt->parsed()) {
      cmd_jdt(c_text, d_text);
    } else if (sc_chains->parsed()) {
      if (up == down) throw input_error("choose exactly one of --up/--down");
      cmd_chains(up, perm);
    } else if (sc_check->parsed()) {
      const int n = parse_group(group);
      if (suite == "monk") check_monk(n);
      else if (suite == "comm") check_comm(n);
      else if (suite == "rsk-fibers") check_rsk_fibers(n, seed);
      else check_oracle(n);
    }
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
