#include "regmaps/census.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "regmaps/schreier.hpp"

namespace fs = std::filesystem;

namespace regmaps {

namespace {

std::string level_name(int k, const char* ext) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "level_%02d.%s", k, ext);
  return buf;
}

std::string record_line(int order_exp, const CensusNode& n) {
  std::ostringstream os;
  os << "order_exp=" << order_exp << " s_exp=" << n.record.s_exp
     << " t_exp=" << n.record.t_exp << " orientable=" << (n.record.orientable ? 1 : 0)
     << " euler_characteristic=" << n.record.euler << " genus=" << n.record.genus
     << " canonical_key_digest=" << n.digest << " parent_digest=" << n.parent_digest;
  return os.str();
}

void save_level(const std::string& dir, const CensusLevel& lvl) {
  fs::path tab = fs::path(dir) / level_name(lvl.order_exp, "tab");
  {
    std::ofstream out(tab);
    if (!out) throw std::runtime_error("cannot write " + tab.string());
    out << "# census level " << lvl.order_exp << ": " << lvl.nodes.size() << " groups\n";
    for (const CensusNode& n : lvl.nodes) {
      out << n.digest << ' ' << n.parent_digest << ' ' << n.canon.table.size();
      for (const auto& row : n.canon.table.rows)
        for (Gen g = 0; g < 3; ++g) out << ' ' << row[g] + 1;
      out << '\n';
    }
  }
  {
    std::ofstream out(fs::path(dir) / level_name(lvl.order_exp, "maps"));
    for (const CensusNode& n : lvl.nodes)
      if (n.proper) out << record_line(lvl.order_exp, n) << '\n';
  }
  std::ofstream done(fs::path(dir) / level_name(lvl.order_exp, "done"));
  done << lvl.nodes.size() << '\n';
}

bool load_level(const std::string& dir, int k, CensusLevel* out) {
  fs::path donep = fs::path(dir) / level_name(k, "done");
  fs::path tab = fs::path(dir) / level_name(k, "tab");
  if (!fs::exists(donep) || !fs::exists(tab)) return false;
  std::ifstream in(tab);
  if (!in) return false;
  out->order_exp = k;
  out->nodes.clear();
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    CensusNode n;
    uint32_t m = 0;
    if (!(ls >> n.digest >> n.parent_digest >> m)) return false;
    n.canon.table.rows.resize(m);
    for (uint32_t c = 0; c < m; ++c)
      for (Gen g = 0; g < 3; ++g) {
        uint32_t v = 0;
        if (!(ls >> v) || v < 1 || v > m) return false;
        n.canon.table.rows[c][g] = v - 1;
      }
    if (n.digest != n.canon.digest()) return false;
    n.proper = is_proper(n.canon.table);
    if (n.proper) n.record = analyze(n.canon.table);
    out->nodes.push_back(std::move(n));
  }
  return true;
}

void save_counts(const std::string& dir, const Census& c) {
  std::ofstream out(fs::path(dir) / "counts.csv");
  out << "order_exp,count\n";
  for (const CensusLevel& lvl : c.levels) out << lvl.order_exp << ',' << lvl.proper_count() << '\n';
}

struct ChildCand {
  CanonicalTable canon;
  std::string digest;
};

}  // namespace

size_t CensusLevel::proper_count() const {
  size_t n = 0;
  for (const CensusNode& node : nodes) n += node.proper;
  return n;
}

const CensusNode* Census::find(int order_exp, const std::string& digest) const {
  if (order_exp < 0 || order_exp >= static_cast<int>(levels.size())) return nullptr;
  for (const CensusNode& n : levels[order_exp].nodes)
    if (n.digest == digest) return &n;
  return nullptr;
}

Census run_census(int max_exp, const CensusOptions& opts) {
  if (max_exp < 0) throw std::invalid_argument("max_exp must be >= 0");
  int threads = opts.threads > 0 ? opts.threads : 1;
  Census census;
  if (!opts.out_dir.empty()) fs::create_directories(opts.out_dir);
  if (opts.resume && !opts.out_dir.empty()) {
    for (int k = 0; k <= max_exp; ++k) {
      CensusLevel lvl;
      if (!load_level(opts.out_dir, k, &lvl)) break;
      census.levels.push_back(std::move(lvl));
    }
    if (opts.verbose && !census.levels.empty())
      std::cerr << "census: resumed " << census.levels.size() << " level(s) from " << opts.out_dir
                << "\n";
  }
  if (census.levels.empty()) {
    CensusLevel l0;
    l0.order_exp = 0;
    CensusNode root;
    root.canon.table.rows = {{0, 0, 0}};
    root.digest = root.canon.digest();
    root.parent_digest = "-";
    l0.nodes.push_back(std::move(root));
    census.levels.push_back(std::move(l0));
    if (!opts.out_dir.empty()) save_level(opts.out_dir, census.levels.back());
  }

  for (int k = static_cast<int>(census.levels.size()); k <= max_exp; ++k) {
    const CensusLevel& parents = census.levels[k - 1];
    std::vector<std::vector<ChildCand>> per_parent(parents.nodes.size());
    auto worker = [&](int tid) {
      for (size_t p = static_cast<size_t>(tid); p < parents.nodes.size();
           p += static_cast<size_t>(threads)) {
        const CosetTable& pt = parents.nodes[p].canon.table;
        ModuleSpace mod = schreier_module(pt);
        Coinvariants w = coinvariants(pt, mod);
        if (w.dim >= 30) throw std::runtime_error("census: coinvariant dimension unexpectedly large");
        for (uint64_t lam = 1; lam < (uint64_t{1} << w.dim); ++lam) {
          BitVec l(w.dim);
          for (size_t b = 0; b < w.dim; ++b)
            if ((lam >> b) & 1) l.set(b, true);
          CosetTable child = extend(pt, mod, w, l);
          ChildCand cand;
          cand.canon = canonicalize(child);
          cand.digest = cand.canon.digest();
          per_parent[p].push_back(std::move(cand));
        }
      }
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (int tid = 0; tid < threads; ++tid) pool.emplace_back(worker, tid);
      for (auto& th : pool) th.join();
    }

    CensusLevel lvl;
    lvl.order_exp = k;
    std::unordered_set<std::string> seen;
    for (size_t p = 0; p < per_parent.size(); ++p) {
      for (ChildCand& cand : per_parent[p]) {
        if (!seen.insert(cand.digest).second) continue;
        CensusNode n;
        n.canon = std::move(cand.canon);
        n.digest = std::move(cand.digest);
        n.parent_digest = parents.nodes[p].digest;
        n.proper = is_proper(n.canon.table);
        if (n.proper) n.record = analyze(n.canon.table);
        lvl.nodes.push_back(std::move(n));
      }
    }
    if (opts.verbose)
      std::cerr << "census: order 2^" << k << ": " << lvl.nodes.size() << " groups, "
                << lvl.proper_count() << " proper maps\n";
    census.levels.push_back(std::move(lvl));
    if (!opts.out_dir.empty()) {
      save_level(opts.out_dir, census.levels.back());
      save_counts(opts.out_dir, census);
    }
  }
  return census;
}

Census load_census(const std::string& dir, int max_exp) {
  Census census;
  for (int k = 0; max_exp < 0 || k <= max_exp; ++k) {
    CensusLevel lvl;
    if (!load_level(dir, k, &lvl)) break;
    census.levels.push_back(std::move(lvl));
  }
  if (census.levels.empty())
    throw std::runtime_error("no census levels found in " + dir);
  return census;
}

std::string census_records(const Census& c) {
  std::ostringstream os;
  for (const CensusLevel& lvl : c.levels)
    for (const CensusNode& n : lvl.nodes)
      if (n.proper) os << record_line(lvl.order_exp, n) << '\n';
  return os.str();
}

CrosscheckResult crosscheck_counts(const Census& c, const std::string& csv_path) {
  std::ifstream in(csv_path);
  if (!in) return {CrosscheckStatus::kMissing, "counts file not found: " + csv_path};
  std::string line;
  std::ostringstream detail;
  bool ok = true;
  size_t compared = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string a, b;
    if (!std::getline(ls, a, ',') || !std::getline(ls, b)) continue;
    int order = 0;
    uint64_t expected = 0;
    try {
      order = std::stoi(a);
      expected = std::stoull(b);
    } catch (const std::exception&) {
      continue;  // header or stray line
    }
    if (order < 0 || order > c.max_exp()) continue;
    ++compared;
    uint64_t got = c.levels[order].proper_count();
    if (got != expected) {
      ok = false;
      detail << "order 2^" << order << ": census has " << got << ", file says " << expected << "; ";
    }
  }
  if (ok) detail << "matched " << compared << " order(s)";
  return {ok ? CrosscheckStatus::kOk : CrosscheckStatus::kMismatch, detail.str()};
}

}  // namespace regmaps
