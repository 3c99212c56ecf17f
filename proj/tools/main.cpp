#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <random>
#include <sstream>

#include "hurwitz/dessin.hpp"
#include "hurwitz/search.hpp"
#include "hurwitz/stability.hpp"
#include "hurwitz/textio.hpp"
#include "hurwitz/tiling.hpp"
#include "hurwitz/transform.hpp"

using namespace hurwitz;

namespace {

constexpr const char* kVersion = "hurwitz 0.1.0";

// Exit codes: 0 success/realizable, 2 input error, 3 proven unsatisfiable,
// 4 unknown (budget exhausted).
enum ExitCode { kOk = 0, kInputError = 2, kUnsat = 3, kUnknown = 4 };

Json report(const std::string& command) {
  Json j;
  j["tool"] = kVersion;
  j["command"] = command;
  return j;
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) out.push_back(std::stoi(piece));
  return out;
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(text));
  return Rat(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

Json realize_json(const RamData& data, const RealizeResult& res) {
  Json j;
  j["input"] = to_json(data);
  j["nodes"] = res.nodes;
  j["space"] = res.space;
  switch (res.kind) {
    case RealizeResult::Kind::Witness:
      j["outcome"] = "witness";
      j["witness"] = to_json(*res.witness);
      j["witness_cycles"] = format_witness(*res.witness);
      break;
    case RealizeResult::Kind::Unsat:
      j["outcome"] = "unsat";
      break;
    case RealizeResult::Kind::Unknown:
      j["outcome"] = "unknown";
      break;
  }
  return j;
}

int exit_for(const RealizeResult& res) {
  if (res.is_witness()) return kOk;
  if (res.is_unsat()) return kUnsat;
  return kUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realizability toolkit for almost-regular branched covers"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "json, text or dot")->capture_default_str();

  long long budget = SearchOptions{}.budget;
  int threads = 1;
  app.add_option("--budget", budget, "search budget in backtrack nodes");
  app.add_option("--threads", threads, "internal parallelism cap");

  // genus
  auto* c_genus = app.add_subcommand("genus", "Riemann-Hurwitz genus of ramification data");
  std::string genus_data;
  c_genus->add_option("data", genus_data, "e.g. [1,3][2,2][2,2][2,2]")->required();

  // enumerate
  auto* c_enum = app.add_subcommand("enumerate", "almost-regular families for a Euclidean base");
  std::string enum_base = "2,2,2,2";
  int enum_genus = 1, enum_eps = 10;
  bool enum_count = false;
  c_enum->add_option("--base", enum_base, "comma separated, e.g. 3,3,3")->required();
  c_enum->add_option("--genus", enum_genus, "target family genus (0 or 1)")->required();
  c_enum->add_option("--eps", enum_eps, "maximal error")->required();
  c_enum->add_flag("--count", enum_count, "print only the number of families");

  // realize
  auto* c_realize = app.add_subcommand("realize", "search for a permutation witness");
  std::string realize_data;
  c_realize->add_option("data", realize_data)->required();

  // verify
  auto* c_verify = app.add_subcommand("verify", "check a witness against ramification data");
  std::string verify_witness, verify_data;
  c_verify->add_option("witness", verify_witness, "e.g. \"(0 1) | (0 1)\"")->required();
  c_verify->add_option("data", verify_data)->required();

  // tile
  auto* c_tile = app.add_subcommand("tile", "torus tiling with a given polygon count");
  long long tile_n = 1;
  std::string tile_shape = "hexagon";
  c_tile->add_option("polygons", tile_n)->required();
  c_tile->add_option("--shape", tile_shape, "hexagon or square")->capture_default_str();

  // compose
  auto* c_compose = app.add_subcommand("compose", "compose a type with a base covering");
  std::string compose_data, compose_map = "square", compose_place;
  c_compose->add_option("data", compose_data)->required();
  c_compose->add_option("--map", compose_map, "square, cube or identity")
      ->capture_default_str();
  c_compose->add_option("--place", compose_place,
                        "branch placements, e.g. 1:inf,2:1,3:-1 (1-based)")
      ->required();

  // add-edges
  auto* c_add = app.add_subcommand("add-edges", "edge-addition move on a type");
  std::string add_data;
  int add_slot_a = 1, add_slot_b = 2, add_a = 1, add_b = 1, add_k = 1;
  c_add->add_option("data", add_data)->required();
  c_add->add_option("--slot-a", add_slot_a, "1-based slot")->required();
  c_add->add_option("--entry-a", add_a)->required();
  c_add->add_option("--slot-b", add_slot_b, "1-based slot")->required();
  c_add->add_option("--entry-b", add_b)->required();
  c_add->add_option("--edges", add_k)->required();

  // split
  auto* c_split = app.add_subcommand("split", "split a [1^k,3^m,2*]^4 family into halves");
  std::string split_ones, split_threes;
  c_split->add_option("--ones", split_ones, "counts of 1s per slot, e.g. 1,1,1,1")->required();
  c_split->add_option("--threes", split_threes, "counts of 3s per slot")->required();

  // stability
  auto* c_stab = app.add_subcommand("stability", "Hamming metrics and delta-solutions");
  auto* s_ham = c_stab->add_subcommand("hamming", "normalized Hamming distance");
  std::string ham_p, ham_q;
  int ham_degree = 0;
  s_ham->add_option("p", ham_p, "cycles, e.g. \"(0 1)\"")->required();
  s_ham->add_option("q", ham_q)->required();
  s_ham->add_option("--degree", ham_degree)->required();
  auto* s_delta = c_stab->add_subcommand("delta", "delta-solution check");
  std::string delta_relators, delta_tuple, delta_value = "1";
  int delta_degree = 0;
  s_delta->add_option("--relators", delta_relators, "e.g. \"a1^2, a2^2, a1 a2\"")->required();
  s_delta->add_option("--tuple", delta_tuple, "witness cycles, |-separated")->required();
  s_delta->add_option("--degree", delta_degree)->required();
  s_delta->add_option("--delta", delta_value, "rational like 1/8")->capture_default_str();
  auto* s_rate = c_stab->add_subcommand("rate", "quasi-local change rate diagnostic");
  std::string rate_samples;
  s_rate->add_option("--samples", rate_samples, "degree:changes pairs, e.g. 10:3,20:3")
      ->required();

  // property
  auto* c_prop = app.add_subcommand("property", "randomized property checks");
  auto* p_inv = c_prop->add_subcommand("involutions", "parity of product cycle lengths");
  int prop_trials = 1000, prop_max_n = 40;
  unsigned prop_seed = 1;
  p_inv->add_option("--trials", prop_trials)->capture_default_str();
  p_inv->add_option("--max-n", prop_max_n)->capture_default_str();
  p_inv->add_option("--seed", prop_seed)->capture_default_str();

  // reproduce-tables
  auto* c_tables = app.add_subcommand("reproduce-tables", "emit the family tables");
  bool tables_full = false;
  c_tables->add_flag("--full", tables_full, "also rerun the exhaustive nonexistence checks");

  CLI11_PARSE(app, argc, argv);

  SearchOptions sopts;
  sopts.budget = budget;
  sopts.threads = threads;

  try {
    if (*c_genus) {
      auto data = parse_ramdata(genus_data);
      auto g = genus(data);
      auto j = report("genus");
      j["input"] = to_json(data);
      if (g.ok) {
        j["outcome"] = "value";
        j["genus"] = g.g;
      } else {
        j["outcome"] = "rejected";
        j["raw"] = g.raw.str();
      }
      if (format == "text") {
        std::cout << (g.ok ? std::to_string(g.g) : "rejected (" + g.raw.str() + ")") << "\n";
      } else {
        emit(j);
      }
      return kOk;
    }

    if (*c_enum) {
      auto base = parse_int_list(enum_base);
      auto families = enumerate_families(base, enum_genus, enum_eps);
      if (enum_count) {
        auto j = report("enumerate");
        j["base"] = base;
        j["genus"] = enum_genus;
        j["eps"] = enum_eps;
        j["count"] = families.size();
        if (format == "text")
          std::cout << families.size() << "\n";
        else
          emit(j);
        return kOk;
      }
      for (const auto& f : families) {
        if (format == "text") {
          std::cout << format_family(f) << "\n";
        } else {
          auto j = report("enumerate");
          j["family"] = to_json(f);
          j["text"] = format_family(f);
          emit(j);
        }
      }
      return kOk;
    }

    if (*c_realize) {
      auto data = parse_ramdata(realize_data);
      auto res = realize(data, sopts);
      auto j = report("realize");
      j.update(realize_json(data, res));
      if (format == "text") {
        if (res.is_witness())
          std::cout << "witness " << format_witness(*res.witness) << "\n";
        else
          std::cout << (res.is_unsat() ? "unsat" : "unknown") << " nodes=" << res.nodes << "\n";
      } else {
        emit(j);
      }
      return exit_for(res);
    }

    if (*c_verify) {
      auto data = parse_ramdata(verify_data);
      auto witness = parse_witness(verify_witness, static_cast<int>(data.degree()));
      auto rep = verify(witness, data);
      auto j = report("verify");
      j["input"] = to_json(data);
      j["ok"] = rep.ok;
      if (!rep.ok) j["violation"] = rep.violation;
      if (format == "text")
        std::cout << (rep.ok ? "ok" : "violated: " + rep.violation) << "\n";
      else
        emit(j);
      return kOk;
    }

    if (*c_tile) {
      auto shape = tile_shape == "square" ? TileShape::Square : TileShape::Hexagon;
      auto t = tile_torus(tile_n, shape);
      if (format == "dot") {
        std::cout << tiling_dot(t);
        return kOk;
      }
      auto j = report("tile");
      j["polygons"] = t.polygons;
      j["shape"] = tile_shape;
      j["basis"] = Json::array({Json::array({t.basis.a, t.basis.c}),
                                Json::array({t.basis.b, t.basis.d})});
      j["determinant"] = t.basis.det();
      j["disk_radius"] = max_disk_radius(t);
      if (format == "text")
        std::cout << "basis (" << t.basis.a << "," << t.basis.c << "),(" << t.basis.b << ","
                  << t.basis.d << ") det " << t.basis.det() << " disk radius "
                  << max_disk_radius(t) << "\n";
      else
        emit(j);
      return kOk;
    }

    if (*c_compose) {
      auto data = parse_ramdata(compose_data);
      BaseMap g = compose_map == "cube"
                      ? BaseMap::cube()
                      : (compose_map == "identity" ? BaseMap::identity(data.branch_points())
                                                   : BaseMap::square());
      std::map<int, std::string> placement;
      std::stringstream ss(compose_place);
      std::string piece;
      while (std::getline(ss, piece, ',')) {
        auto colon = piece.find(':');
        if (colon == std::string::npos)
          throw std::invalid_argument("placement entries look like 1:inf");
        placement[std::stoi(piece.substr(0, colon)) - 1] = piece.substr(colon + 1);
      }
      auto out = compose(data, placement, g);
      auto j = report("compose");
      j["input"] = to_json(data);
      j["map"] = compose_map;
      j["composite"] = to_json(out);
      j["text"] = format_ramdata(out);
      if (format == "text")
        std::cout << format_ramdata(out) << "\n";
      else
        emit(j);
      return kOk;
    }

    if (*c_add) {
      auto data = parse_ramdata(add_data);
      auto out = add_edges(data, add_slot_a - 1, add_a, add_slot_b - 1, add_b, add_k);
      auto j = report("add-edges");
      j["input"] = to_json(data);
      j["result"] = to_json(out);
      j["text"] = format_ramdata(out);
      if (format == "text")
        std::cout << format_ramdata(out) << "\n";
      else
        emit(j);
      return kOk;
    }

    if (*c_split) {
      auto ones = parse_int_list(split_ones);
      auto threes = parse_int_list(split_threes);
      if (ones.size() != 4 || threes.size() != 4)
        throw std::invalid_argument("--ones and --threes need four entries");
      auto res = split_2222({ones[0], ones[1], ones[2], ones[3]},
                            {threes[0], threes[1], threes[2], threes[3]});
      auto j = report("split");
      j["ones"] = ones;
      j["threes"] = threes;
      switch (res.kind) {
        case SplitResult::Kind::Halves:
          j["outcome"] = "halves";
          j["first"] = format_family(res.halves->first);
          j["second"] = format_family(res.halves->second);
          break;
        case SplitResult::Kind::Exceptional:
          j["outcome"] = "exceptional";
          j["id"] = res.exceptional_id;
          break;
        case SplitResult::Kind::NotApplicable:
          j["outcome"] = "not-applicable";
          j["reason"] = res.reason;
          break;
      }
      if (format == "text") {
        if (res.kind == SplitResult::Kind::Halves)
          std::cout << format_family(res.halves->first) << "  +  "
                    << format_family(res.halves->second) << "\n";
        else if (res.kind == SplitResult::Kind::Exceptional)
          std::cout << "exceptional " << res.exceptional_id << "\n";
        else
          std::cout << "not applicable: " << res.reason << "\n";
      } else {
        emit(j);
      }
      return kOk;
    }

    if (*s_ham) {
      auto p = parse_perm_cycles(ham_p, ham_degree);
      auto q = parse_perm_cycles(ham_q, ham_degree);
      auto j = report("stability hamming");
      j["distance"] = hamming(p, q).str();
      if (format == "text")
        std::cout << hamming(p, q).str() << "\n";
      else
        emit(j);
      return kOk;
    }

    if (*s_delta) {
      auto rels = parse_relators(delta_relators);
      auto tuple = parse_witness(delta_tuple, delta_degree);
      auto rep = is_delta_solution(rels, tuple.perms(), parse_rat(delta_value));
      auto j = report("stability delta");
      j["ok"] = rep.ok;
      Json defects = Json::array();
      for (const auto& d : rep.defects) defects.push_back(d.str());
      j["defects"] = defects;
      if (format == "text") {
        std::cout << (rep.ok ? "delta-solution" : "not a delta-solution");
        for (const auto& d : rep.defects) std::cout << " " << d.str();
        std::cout << "\n";
      } else {
        emit(j);
      }
      return kOk;
    }

    if (*s_rate) {
      std::vector<std::pair<long long, long long>> samples;
      std::stringstream ss(rate_samples);
      std::string piece;
      while (std::getline(ss, piece, ',')) {
        auto colon = piece.find(':');
        if (colon == std::string::npos)
          throw std::invalid_argument("samples look like degree:changes");
        samples.emplace_back(std::stoll(piece.substr(0, colon)),
                             std::stoll(piece.substr(colon + 1)));
      }
      auto v = quasi_local_rate(samples);
      auto j = report("stability rate");
      j["max_ratio"] = v.max_ratio.str();
      j["decreasing_tail"] = v.decreasing_tail;
      if (format == "text")
        std::cout << "max " << v.max_ratio.str() << (v.decreasing_tail ? " decreasing" : " flat")
                  << "\n";
      else
        emit(j);
      return kOk;
    }

    if (*p_inv) {
      std::mt19937 rng(prop_seed);
      std::uniform_int_distribution<int> half(1, prop_max_n / 2);
      long long violations = 0;
      for (int t = 0; t < prop_trials; ++t) {
        int n = 2 * half(rng);
        std::vector<int> pts(n);
        for (int i = 0; i < n; ++i) pts[i] = i;
        std::shuffle(pts.begin(), pts.end(), rng);
        std::vector<int> x(n), y(n);
        for (int i = 0; i < n; i += 2) {
          x[pts[i]] = pts[i + 1];
          x[pts[i + 1]] = pts[i];
        }
        std::shuffle(pts.begin(), pts.end(), rng);
        for (int i = 0; i < n; i += 2) {
          y[pts[i]] = pts[i + 1];
          y[pts[i + 1]] = pts[i];
        }
        auto profile = involution_product_profile(Perm(x), Perm(y));
        for (int len : profile.entries())
          if (profile.count(len) % 2 != 0) ++violations;
      }
      auto j = report("property involutions");
      j["trials"] = prop_trials;
      j["seed"] = prop_seed;
      j["violations"] = violations;
      emit(j);
      return violations == 0 ? kOk : 1;
    }

    if (*c_tables) {
      struct Row {
        std::vector<int> base;
        int genus;
        int eps;
      };
      std::vector<Row> rows = {{{3, 3, 3}, 1, 10}, {{2, 3, 6}, 1, 6},    {{2, 4, 4}, 1, 6},
                               {{2, 2, 2, 2}, 1, 10}, {{3, 3, 3}, 0, 10}, {{2, 3, 6}, 0, 6},
                               {{2, 4, 4}, 0, 6},  {{2, 2, 2, 2}, 0, 10}};
      for (const auto& row : rows) {
        auto families = enumerate_families(row.base, row.genus, row.eps);
        auto j = report("reproduce-tables");
        j["base"] = row.base;
        j["genus"] = row.genus;
        j["eps"] = row.eps;
        j["count"] = families.size();
        Json list = Json::array();
        for (const auto& f : families) list.push_back(format_family(f));
        j["families"] = list;
        emit(j);
      }
      if (tables_full) {
        struct Claim {
          const char* family;
          std::vector<long long> degrees;
        };
        std::vector<Claim> claims = {{"[1,3|2*][2*][2*][2*]", {4, 6, 8, 10}},
                                     {"[3*][3*][2,4|3*]", {6, 9, 12}},
                                     {"[2*][3,5|4*][4*]", {8, 12}},
                                     {"[2*][3*][5,7|6*]", {12}},
                                     {"[2*][1|3*][2,2|6*]", {4, 10}}};
        for (const auto& claim : claims) {
          auto fam = parse_family(claim.family);
          for (const auto& rep : check_nonexistence(fam, claim.degrees, sopts)) {
            auto j = report("reproduce-tables");
            j["family"] = claim.family;
            j["degree"] = rep.degree;
            j.update(realize_json(member(fam, rep.degree), rep.result));
            emit(j);
            if (!rep.result.is_unsat()) return exit_for(rep.result);
          }
        }
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
