#include "hyperoct/ops.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "hyperoct/decomp.hpp"
#include "hyperoct/error.hpp"
#include "hyperoct/model.hpp"
#include "hyperoct/partition.hpp"
#include "hyperoct/perm.hpp"
#include "hyperoct/repdata.hpp"

namespace hyperoct::ops {

using json = nlohmann::ordered_json;

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string finish(const json& j) { return j.dump() + "\n"; }

// The subgroup specs accepted by brauer-dim:
//   R_<r>                      the cyclic group on the first r blocks
//   N_<r> / K_<r>              its normalizer / base-centralizer generators
//   R_omega:1+2,3+4/5          pair products and singleton blocks
//   Q:<l1>,<l2>,<t>,<u>        the distinguished vertex subgroup
//   gens:(..);(..)             explicit cycle-notation generators
std::vector<SignedPerm> parse_subgroup(const std::string& spec, int p, int n,
                                       std::string* display) {
  *display = spec;
  auto starts = [&](const char* prefix) { return spec.rfind(prefix, 0) == 0; };
  auto parse_int = [](const std::string& s, const char* what) {
    require(!s.empty() && s.find_first_not_of("0123456789") == std::string::npos,
            std::string("malformed ") + what + " in subgroup spec");
    return std::stoi(s);
  };
  if (starts("R_omega:")) {
    std::string body = spec.substr(8);
    size_t slash = body.find('/');
    require(slash != std::string::npos, "R_omega spec needs '/': pairs/rest");
    std::string pairs_part = body.substr(0, slash);
    std::string rest_part = body.substr(slash + 1);
    Omega w;
    std::vector<char> seen;
    auto mark = [&seen](int i) {
      if (static_cast<size_t>(i) >= seen.size()) seen.resize(i + 1, 0);
      require(!seen[i], "index " + std::to_string(i) + " repeated in R_omega spec");
      seen[i] = 1;
    };
    std::stringstream ps(pairs_part);
    std::string tok;
    while (std::getline(ps, tok, ',')) {
      if (tok.empty()) continue;
      size_t plus = tok.find('+');
      require(plus != std::string::npos, "R_omega pairs look like 1+2");
      int i = parse_int(tok.substr(0, plus), "pair index");
      int j = parse_int(tok.substr(plus + 1), "pair index");
      require(i >= 1 && j >= 1 && i != j, "bad pair in R_omega spec");
      mark(i);
      mark(j);
      w.pairs.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::stringstream rs(rest_part);
    while (std::getline(rs, tok, ',')) {
      if (tok.empty()) continue;
      int i = parse_int(tok, "rest index");
      require(i >= 1, "bad rest index in R_omega spec");
      mark(i);
      w.rest.push_back(i);
    }
    int r = static_cast<int>(seen.size()) - 1;
    for (int i = 1; i <= r; ++i)
      require(i < static_cast<int>(seen.size()) && seen[i],
              "R_omega spec must cover 1..r without gaps");
    require(r >= 1, "R_omega spec is empty");
    return r_omega_gens(w, p, n);
  }
  if (starts("R_")) return r_subgroup_gens(parse_int(spec.substr(2), "r"), p, n);
  if (starts("N_")) return normalizer_gens(parse_int(spec.substr(2), "r"), p, n);
  if (starts("K_")) return base_centralizer_gens(parse_int(spec.substr(2), "r"), p, n);
  if (starts("Q:")) {
    std::string body = spec.substr(2);
    std::vector<int> vals;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) vals.push_back(parse_int(tok, "Q parameter"));
    require(vals.size() == 4, "Q spec is Q:<l1>,<l2>,<t>,<u>");
    return q_subgroup_gens(TwoComp{vals[0], vals[1]}, vals[2], vals[3], p, n);
  }
  if (starts("gens:")) {
    std::vector<SignedPerm> gens;
    std::stringstream ss(spec.substr(5));
    std::string tok;
    while (std::getline(ss, tok, ';'))
      if (!tok.empty()) gens.push_back(parse_cycles(tok, n));
    require(!gens.empty(), "no generators in spec");
    return gens;
  }
  fail(errc::invalid_input, "unrecognised subgroup spec \"" + spec + "\"");
}

json gens_json(const std::vector<SignedPerm>& gens) {
  json arr = json::array();
  for (const auto& g : gens) arr.push_back(to_cycles(g));
  return arr;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  fail(errc::invalid_input, "unknown format \"" + name + "\" (expected text, json or csv)");
}

std::string classes(int n, Format f) {
  auto types = all_cycle_types(n);
  BigInt order = group_order(n);
  if (f == Format::json) {
    json j;
    j["n"] = n;
    j["group_order"] = order.str();
    j["count"] = types.size();
    json arr = json::array();
    for (const auto& t : types) {
      json row;
      row["type"] = format_cycle_type(t);
      row["centralizer_order"] = centralizer_order(t).str();
      row["class_size"] = class_size(t).str();
      arr.push_back(std::move(row));
    }
    j["classes"] = std::move(arr);
    return finish(j);
  }
  std::ostringstream os;
  if (f == Format::csv) {
    os << "type,centralizer_order,class_size\n";
    for (const auto& t : types)
      os << csv_field(format_cycle_type(t)) << ',' << centralizer_order(t) << ','
         << class_size(t) << '\n';
    return os.str();
  }
  for (const auto& t : types)
    os << format_cycle_type(t) << "  centralizer=" << centralizer_order(t)
       << "  size=" << class_size(t) << '\n';
  os << "classes: " << types.size() << "  group order: " << order << '\n';
  return os.str();
}

std::string centralizer(const std::string& perm_cycles, int n, Format f) {
  SignedPerm g = parse_cycles(perm_cycles, n);
  CycleType t = cycle_type(g);
  BigInt cent = centralizer_order(t), size = class_size(t);
  if (f == Format::json) {
    json j;
    j["n"] = n;
    j["perm"] = to_cycles(g);
    j["type"] = format_cycle_type(t);
    j["centralizer_order"] = cent.str();
    j["class_size"] = size.str();
    return finish(j);
  }
  if (f == Format::csv) {
    std::ostringstream os;
    os << "type,centralizer_order,class_size\n"
       << csv_field(format_cycle_type(t)) << ',' << cent << ',' << size << '\n';
    return os.str();
  }
  std::ostringstream os;
  os << "type: " << format_cycle_type(t) << "\ncentralizer_order: " << cent
     << "\nclass_size: " << size << '\n';
  return os.str();
}

std::string model_dim_report(int a, int b, int c, Format f) {
  BigInt dim = model_dim(a, b, c);
  if (f == Format::json) {
    json j;
    j["a"] = a;
    j["b"] = b;
    j["c"] = c;
    j["n"] = 2 * a + b + c;
    j["dim"] = dim.str();
    return finish(j);
  }
  if (f == Format::csv) return "dim\n" + dim.str() + "\n";
  return dim.str() + "\n";
}

std::string model_constituents_report(int a, int b, int c, Format f) {
  auto labels = model_constituents(a, b, c);
  if (f == Format::json) {
    json j;
    j["a"] = a;
    j["b"] = b;
    j["c"] = c;
    j["count"] = labels.size();
    json arr = json::array();
    BigInt total = 0;
    for (const auto& bp : labels) {
      json row;
      row["label"] = format_bipartition(bp);
      BigInt d = specht_dim(bp);
      row["dim"] = d.str();
      total += d;
      arr.push_back(std::move(row));
    }
    j["constituents"] = std::move(arr);
    j["total_dim"] = total.str();
    return finish(j);
  }
  std::ostringstream os;
  if (f == Format::csv) {
    os << "label,dim\n";
    for (const auto& bp : labels)
      os << csv_field(format_bipartition(bp)) << ',' << specht_dim(bp) << '\n';
    return os.str();
  }
  for (const auto& bp : labels) os << format_bipartition(bp) << '\n';
  return os.str();
}

std::string specht_dim_report(const std::string& pair, Format f) {
  Bipartition bp = parse_bipartition(pair);
  BigInt dim = specht_dim(bp);
  if (f == Format::json) {
    json j;
    j["label"] = format_bipartition(bp);
    j["n"] = size_of(bp);
    j["dim"] = dim.str();
    return finish(j);
  }
  if (f == Format::csv) return "label,dim\n" + csv_field(format_bipartition(bp)) + "," + dim.str() + "\n";
  return dim.str() + "\n";
}

namespace {

json model_vector_json(const ModelVector& v) {
  json j;
  j["g"] = to_cycles(v.g);
  json gam = json::array();
  for (int x : v.gamma) gam.push_back(json::array({x}));
  json del = json::array();
  for (int x : v.delta) del.push_back(json::array({x}));
  j["gamma"] = std::move(gam);
  j["delta"] = std::move(del);
  j["sign"] = v.sign;
  return j;
}

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string basis_report(int a, int b, int c, long long limit, Format f) {
  if (limit >= 0) {
    BigInt dim = model_dim(a, b, c);
    require(dim <= limit,
            "basis has " + dim.str() + " vectors, over the limit " + std::to_string(limit),
            errc::limit_exceeded);
  }
  auto basis = enumerate_basis(ModelIndex{a, b, c});
  if (f == Format::json) {
    json j;
    j["a"] = a;
    j["b"] = b;
    j["c"] = c;
    j["count"] = basis.size();
    json arr = json::array();
    for (const auto& v : basis) arr.push_back(model_vector_json(v));
    j["basis"] = std::move(arr);
    return finish(j);
  }
  std::ostringstream os;
  if (f == Format::csv) {
    os << "g,gamma,delta,sign\n";
    for (const auto& v : basis)
      os << csv_field(to_cycles(v.g)) << ',' << join_ints(v.gamma, ';') << ','
         << join_ints(v.delta, ';') << ',' << (v.sign > 0 ? "1" : "-1") << '\n';
    return os.str();
  }
  for (const auto& v : basis)
    os << "g=" << to_cycles(v.g) << " gamma=[" << join_ints(v.gamma, ',') << "] delta=["
       << join_ints(v.delta, ',') << "] sign=" << (v.sign > 0 ? "+1" : "-1") << '\n';
  os << "count: " << basis.size() << '\n';
  return os.str();
}

std::string brauer_dim_report(int a, int b, int c, int p, const std::string& subgroup,
                              long long limit, int jobs, Format f) {
  const int n = 2 * a + b + c;
  std::string display;
  auto gens = parse_subgroup(subgroup, p, n, &display);
  BigInt dim = brauer_quotient_dim(ModelIndex{a, b, c}, gens, limit, jobs);
  if (f == Format::json) {
    json j;
    j["a"] = a;
    j["b"] = b;
    j["c"] = c;
    j["p"] = p;
    j["subgroup"] = display;
    j["generators"] = gens_json(gens);
    j["dim"] = dim.str();
    return finish(j);
  }
  if (f == Format::csv) return "dim\n" + dim.str() + "\n";
  return dim.str() + "\n";
}

std::string summand_table_report(int a, int b, int c, int p, int r, long long limit, int jobs,
                                 Format f) {
  SummandTable table = summand_dim_table(ModelIndex{a, b, c}, p, r, limit, jobs);
  if (f == Format::json) {
    json j;
    j["a"] = a;
    j["b"] = b;
    j["c"] = c;
    j["p"] = p;
    j["r"] = r;
    json rows = json::array();
    for (const auto& row : table.rows) {
      json rj;
      rj["s"] = row.s;
      rj["t"] = row.t;
      rj["u"] = row.u;
      rj["fixed_dim"] = row.fixed_dim.str();
      rj["tail_dim"] = row.tail_dim.str();
      rj["value"] = row.value.str();
      rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);
    j["total"] = table.total.str();
    return finish(j);
  }
  std::ostringstream os;
  if (f == Format::csv) {
    os << "s,t,u,fixed_dim,tail_dim,value\n";
    for (const auto& row : table.rows)
      os << row.s << ',' << row.t << ',' << row.u << ',' << row.fixed_dim << ','
         << row.tail_dim << ',' << row.value << '\n';
    return os.str();
  }
  os << "s t u fixed tail value\n";
  for (const auto& row : table.rows)
    os << row.s << ' ' << row.t << ' ' << row.u << ' ' << row.fixed_dim << ' ' << row.tail_dim
       << ' ' << row.value << '\n';
  os << "total: " << table.total << '\n';
  return os.str();
}

std::string omega_report(int s, int k, long long limit, Format f) {
  BigInt count = omega_count(s, k);
  if (limit >= 0)
    require(count <= limit,
            "there are " + count.str() + " pair/rest partitions, over the limit " +
                std::to_string(limit),
            errc::limit_exceeded);
  auto omegas = omega_enum(s, k);
  require(BigInt(omegas.size()) == count, "enumeration disagrees with the closed count",
          errc::internal);
  auto pair_text = [](const Omega& w) {
    std::string txt;
    for (auto [i, j] : w.pairs) txt += "(" + std::to_string(i) + " " + std::to_string(j) + ")";
    return txt;
  };
  if (f == Format::json) {
    json j;
    j["s"] = s;
    j["k"] = k;
    j["count"] = count.str();
    json arr = json::array();
    for (const auto& w : omegas) {
      json wj;
      json pr = json::array();
      for (auto [i, jj] : w.pairs) pr.push_back(json::array({i, jj}));
      wj["pairs"] = std::move(pr);
      wj["rest"] = w.rest;
      arr.push_back(std::move(wj));
    }
    j["partitions"] = std::move(arr);
    return finish(j);
  }
  std::ostringstream os;
  if (f == Format::csv) {
    os << "pairs,rest\n";
    for (const auto& w : omegas)
      os << csv_field(pair_text(w)) << ',' << join_ints(w.rest, ';') << '\n';
    return os.str();
  }
  for (const auto& w : omegas) {
    os << pair_text(w);
    if (!w.rest.empty()) os << " rest{" << join_ints(w.rest, ',') << "}";
    if (w.pairs.empty() && w.rest.empty()) os << "(empty)";
    os << '\n';
  }
  os << "count: " << count << '\n';
  return os.str();
}

std::string vertices_report(int a, int b, int c, int p, Format f) {
  auto catalog = vertex_catalog(ModelIndex{a, b, c}, p);
  if (f == Format::json) {
    json j;
    j["a"] = a;
    j["b"] = b;
    j["c"] = c;
    j["p"] = p;
    j["count"] = catalog.size();
    json arr = json::array();
    for (const auto& d : catalog) {
      json dj;
      dj["r"] = d.r;
      dj["lambda"] = json::array({d.lambda.l1, d.lambda.l2});
      dj["t"] = d.t;
      dj["u"] = d.u;
      dj["name"] = d.name;
      dj["has_generators"] = d.has_gens;
      if (d.has_gens) dj["generators"] = gens_json(d.gens);
      arr.push_back(std::move(dj));
    }
    j["vertices"] = std::move(arr);
    return finish(j);
  }
  std::ostringstream os;
  if (f == Format::csv) {
    os << "r,lambda1,lambda2,t,u,name\n";
    for (const auto& d : catalog)
      os << d.r << ',' << d.lambda.l1 << ',' << d.lambda.l2 << ',' << d.t << ',' << d.u << ','
         << csv_field(d.name) << '\n';
    return os.str();
  }
  for (const auto& d : catalog) {
    os << "r=" << d.r << " lambda=(" << d.lambda.l1 << "," << d.lambda.l2 << ") t=" << d.t
       << " u=" << d.u << "  " << d.name;
    if (d.has_gens) {
      os << "  gens:";
      for (const auto& g : d.gens) os << ' ' << to_cycles(g);
    }
    os << '\n';
  }
  os << "count: " << catalog.size() << '\n';
  return os.str();
}

std::string e_set_report(const std::string& gamma, int p, int b, int w_cap, Format f) {
  Partition core = parse_partition(gamma);
  ESet e = w_and_E(core, p, b, w_cap);
  auto heads = maximal_elements(e.elements);
  auto is_head = [&heads](const Partition& q) {
    return std::find(heads.begin(), heads.end(), q) != heads.end();
  };
  if (f == Format::json) {
    json j;
    j["gamma"] = format_partition(core);
    j["p"] = p;
    j["b"] = b;
    j["w"] = e.w;
    json els = json::array(), mx = json::array();
    for (const auto& q : e.elements) els.push_back(format_partition(q));
    for (const auto& q : heads) mx.push_back(format_partition(q));
    j["elements"] = std::move(els);
    j["maximal"] = std::move(mx);
    return finish(j);
  }
  std::ostringstream os;
  if (f == Format::csv) {
    os << "w,element,maximal\n";
    for (const auto& q : e.elements)
      os << e.w << ',' << csv_field(format_partition(q)) << ',' << (is_head(q) ? 1 : 0) << '\n';
    return os.str();
  }
  os << "w: " << e.w << '\n';
  for (const auto& q : e.elements)
    os << format_partition(q) << (is_head(q) ? "  (maximal)" : "") << '\n';
  return os.str();
}

std::string hypothesis_report(const std::string& gamma, int p, int b, int w_cap, Format f) {
  Partition core = parse_partition(gamma);
  bool holds = hypothesis_check(core, p, b, w_cap);
  int wb = w_and_E(core, p, b, w_cap).w;
  bool has_prev = b >= p;
  int wprev = has_prev ? w_and_E(core, p, b - p, w_cap).w : 0;
  if (f == Format::json) {
    json j;
    j["gamma"] = format_partition(core);
    j["p"] = p;
    j["b"] = b;
    j["holds"] = holds;
    j["w_b"] = wb;
    if (has_prev)
      j["w_b_minus_p"] = wprev;
    else
      j["w_b_minus_p"] = nullptr;
    return finish(j);
  }
  if (f == Format::csv) {
    std::ostringstream os;
    os << "holds,w_b,w_b_minus_p\n"
       << (holds ? "true" : "false") << ',' << wb << ',';
    if (has_prev) os << wprev;
    os << '\n';
    return os.str();
  }
  std::ostringstream os;
  os << (holds ? "holds" : "fails") << " (w_b=" << wb;
  if (has_prev) os << ", w_{b-p}=" << wprev;
  os << ")\n";
  return os.str();
}

std::string decomp_cols_report(const std::string& gamma, const std::string& delta, int b, int c,
                               int p, int w_cap, Format f) {
  ColumnsResult res =
      decomposition_columns(parse_partition(gamma), parse_partition(delta), b, c, p, w_cap);
  if (f == Format::json) {
    json j;
    json blk;
    blk["gamma"] = format_partition(res.block.gamma);
    blk["v"] = res.block.v;
    blk["delta"] = format_partition(res.block.delta);
    blk["w"] = res.block.w;
    j["block"] = std::move(blk);
    j["unique"] = res.unique;
    json cols = json::array();
    for (const auto& col : res.columns) {
      json cj;
      cj["label"] = format_bipartition(col.label);
      json rows = json::array();
      for (const auto& r : col.rows) rows.push_back(format_bipartition(r));
      cj["rows"] = std::move(rows);
      cols.push_back(std::move(cj));
    }
    j["columns"] = std::move(cols);
    return finish(j);
  }
  if (f == Format::csv) {
    // 0/1 matrix: rows in enumeration order (descending lexicographic on
    // each factor, which refines dominance), one column per label
    std::ostringstream os;
    os << "row";
    for (const auto& col : res.columns) os << ',' << csv_field(format_bipartition(col.label));
    os << '\n';
    for (const auto& r1 : res.e_b) {
      for (const auto& r2 : res.e_c) {
        Bipartition row{r1, r2};
        os << csv_field(format_bipartition(row));
        for (const auto& col : res.columns) {
          bool in = std::find(col.rows.begin(), col.rows.end(), row) != col.rows.end();
          os << ',' << (in ? 1 : 0);
        }
        os << '\n';
      }
    }
    return os.str();
  }
  std::ostringstream os;
  os << "block: ((" << format_partition(res.block.gamma) << "), " << res.block.v << ") x (("
     << format_partition(res.block.delta) << "), " << res.block.w << ")\n";
  os << "unique: " << (res.unique ? "yes" : "no") << '\n';
  for (const auto& col : res.columns) {
    os << "column " << format_bipartition(col.label) << '\n';
    for (const auto& r : col.rows) os << "  " << format_bipartition(r) << '\n';
  }
  return os.str();
}

std::string block_label_report(const std::string& pair, int p, Format f) {
  Bipartition bp = parse_bipartition(pair);
  BlockLabel bl = block_label(bp, p);
  if (f == Format::json) {
    json j;
    j["label"] = format_bipartition(bp);
    j["p"] = p;
    j["gamma_core"] = format_partition(bl.gamma);
    j["gamma_weight"] = bl.v;
    j["delta_core"] = format_partition(bl.delta);
    j["delta_weight"] = bl.w;
    return finish(j);
  }
  if (f == Format::csv) {
    std::ostringstream os;
    os << "gamma_core,gamma_weight,delta_core,delta_weight\n"
       << csv_field(format_partition(bl.gamma)) << ',' << bl.v << ','
       << csv_field(format_partition(bl.delta)) << ',' << bl.w << '\n';
    return os.str();
  }
  std::ostringstream os;
  os << "((" << format_partition(bl.gamma) << "), " << bl.v << ") x (("
     << format_partition(bl.delta) << "), " << bl.w << ")\n";
  return os.str();
}

std::string simple_labels_report(int n, int p, Format f) {
  auto labels = simple_labels(n, p);
  if (f == Format::json) {
    json j;
    j["n"] = n;
    j["p"] = p;
    j["count"] = labels.size();
    json arr = json::array();
    for (const auto& bp : labels) arr.push_back(format_bipartition(bp));
    j["labels"] = std::move(arr);
    return finish(j);
  }
  std::ostringstream os;
  if (f == Format::csv) {
    os << "label\n";
    for (const auto& bp : labels) os << csv_field(format_bipartition(bp)) << '\n';
    return os.str();
  }
  for (const auto& bp : labels) os << format_bipartition(bp) << '\n';
  os << "count: " << labels.size() << '\n';
  return os.str();
}

std::string closure_order_report(const std::string& gens, int n, long long cap, Format f) {
  std::vector<SignedPerm> parsed;
  std::stringstream ss(gens);
  std::string tok;
  while (std::getline(ss, tok, ';'))
    if (tok.find_first_not_of(" \t") != std::string::npos) parsed.push_back(parse_cycles(tok, n));
  require(!parsed.empty(), "no generators given");
  BigInt order = group_closure_order(parsed, cap);
  if (f == Format::json) {
    json j;
    j["n"] = n;
    j["generators"] = gens_json(parsed);
    j["order"] = order.str();
    return finish(j);
  }
  if (f == Format::csv) return "order\n" + order.str() + "\n";
  return order.str() + "\n";
}

}  // namespace hyperoct::ops
