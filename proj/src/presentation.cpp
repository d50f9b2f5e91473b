#include "regmaps/presentation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "regmaps/relator.hpp"

namespace regmaps {

namespace {

const Word kW01{kR0, kR1};
const Word kW12{kR1, kR2};
const Word kW02{kR0, kR2};
const Word kW21{kR2, kR1};

std::vector<Word> base_relators() {
  return {Word{kR0, kR0}, Word{kR1, kR1}, Word{kR2, kR2}, power(kW02, 2)};
}

Word pow2(const Word& w, long e) { return power(w, 1ul << e); }

[[noreturn]] void bad_params(const std::string& family, const std::string& why) {
  throw std::invalid_argument("preset " + family + ": " + why);
}

void require(bool ok, const std::string& family, const std::string& why) {
  if (!ok) bad_params(family, why);
}

std::string tag(const std::string& family, const std::vector<long>& params) {
  std::string s = family;
  if (!params.empty()) {
    s += '(';
    for (size_t i = 0; i < params.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(params[i]);
    }
    s += ')';
  }
  return s;
}

}  // namespace

Presentation presentation_from_relators(std::vector<Word> relators, std::string family_tag) {
  Presentation p;
  p.family_tag = std::move(family_tag);
  p.relators = base_relators();
  p.relators.resize(3);  // squares only; (r0 r2)^2 is not implied for custom input
  for (Word& w : relators) {
    Word r = free_reduce(w);
    if (r.empty()) continue;
    if (std::find(p.relators.begin(), p.relators.end(), r) == p.relators.end())
      p.relators.push_back(std::move(r));
  }
  return p;
}

Presentation preset(const std::string& family, const std::vector<long>& params) {
  auto need = [&](size_t k) {
    if (params.size() != k)
      bad_params(family, "expected " + std::to_string(k) + " parameter(s)");
  };

  std::vector<Word> rel = base_relators();
  auto add = [&rel](Word w) { rel.push_back(free_reduce(w)); };

  if (family == "delta") {
    need(0);
  } else if (family == "dihedral") {
    need(1);
    long n = params[0];
    require(n >= 3, family, "n >= 3 required");
    add(power(kW01, 2));
    add(pow2(kW12, n - 1));
    // Identifies r0 with the central rotation power; without it the same
    // relator set presents C2 x D of twice the order.
    add(concat(Word{kR0}, pow2(kW12, n - 2)));
  } else if (family == "c2xd") {
    need(1);
    long n = params[0];
    require(n >= 3, family, "n >= 3 required");
    add(power(kW01, 2));
    add(pow2(kW12, n - 2));
  } else if (family == "thm32_case1") {
    need(3);
    long n = params[0], s = params[1], t = params[2];
    require(s >= 2 && t >= 2 && s <= n - 2 && t <= n - 2, family, "2 <= s,t <= n-2 required");
    require(s + t <= n - 1, family, "s+t <= n-1 required");
    add(pow2(kW01, s));
    add(pow2(kW12, t));
    add(commutator(power(kW01, 4), Word{kR2}));
    add(commutator(Word{kR0}, power(kW12, 4)));
    long r = n - s - t;
    if (r % 2 == 1) {
      add(pow2(commutator(power(kW01, 2), Word{kR2}), (r - 1) / 2));
    } else {
      add(pow2(commutator(power(kW01, 2), power(kW12, 2)), (r - 2) / 2));
    }
  } else if (family == "thm32_case2") {
    need(3);
    long n = params[0], s = params[1], t = params[2];
    require(s >= 2 && t >= 2 && s <= n - 2 && t <= n - 2, family, "2 <= s,t <= n-2 required");
    require(s + t == n, family, "s+t = n required");
    add(pow2(kW01, s));
    add(pow2(kW12, t));
    add(commutator(power(kW01, 2), Word{kR2}));
    add(concat(pow2(kW01, s - 1), pow2(kW12, t - 1)));
  } else if (family == "thm32_case3") {
    need(2);
    long n = params[0], t = params[1];
    require(t >= 2 && t <= n - 2, family, "2 <= t <= n-2 required");
    require(2 * t > n, family, "2t > n required");
    add(pow2(kW01, t));
    add(pow2(kW12, t));
    add(concat(pow2(kW01, n - t - 1), pow2(kW12, n - t - 1)));
    add(concat(commutator(power(kW01, 2), Word{kR2}), power(kW21, 4)));
  } else if (family == "prop28_L") {
    need(1);
    long n = params[0];
    require(n >= 5, family, "n >= 5 required");
    add(power(kW01, 4));
    add(pow2(kW12, n - 3));
    add(concat(commutator(power(kW01, 2), Word{kR2}), pow2(kW12, n - 4)));
  } else if (family == "G1" || family == "G2") {
    need(1);
    long n = params[0];
    require(n >= 4, family, "n >= 4 required");
    add(pow2(kW01, n - 2));
    add(pow2(kW12, n - 2));
    Word extra = concat(power(kW01, 2), power(kW12, 2));
    if (family == "G2") extra = concat(extra, pow2(kW12, n - 3));
    add(extra);
  } else if (family == "G3" || family == "G4" || family == "G5" || family == "G6") {
    need(1);
    long n = params[0];
    require(n >= 5, family, "n >= 5 required");
    add(pow2(kW01, n - 3));
    add(pow2(kW12, n - 3));
    Word r5 = concat(power(kW01, 4), power(kW12, 4));
    if (family == "G5" || family == "G6") r5 = concat(r5, pow2(kW12, n - 4));
    add(r5);
    Word r6 = concat(commutator(power(kW01, 2), Word{kR2}), power(kW01, 4));
    if (family == "G4" || family == "G5") r6 = concat(r6, pow2(kW12, n - 4));
    add(r6);
  } else if (family == "H1") {
    need(1);
    long n = params[0];
    require(n >= 4, family, "n >= 4 required");
    add(pow2(kW01, n - 2));
    add(pow2(kW12, n - 2));
    add(concat(power(kW01, 2), power(kW12, 2)));
    add(concat(commutator(power(kW01, 2), Word{kR2}), power(kW21, 4)));
  } else if (family == "H2") {
    need(1);
    long n = params[0];
    require(n >= 4, family, "n >= 4 required");
    add(power(kW01, 4));
    add(pow2(kW12, n - 2));
    add(concat(power(kW01, 2), pow2(kW12, n - 3)));
    add(commutator(power(kW01, 2), Word{kR2}));
  } else if (family == "H3") {
    need(1);
    long n = params[0];
    require(n >= 5, family, "n >= 5 required");
    add(pow2(kW01, n - 3));
    add(pow2(kW12, n - 3));
    add(concat(power(kW01, 4), power(kW12, 4)));
    add(concat(commutator(power(kW01, 2), Word{kR2}), power(kW21, 4)));
  } else if (family == "H4") {
    need(1);
    long n = params[0];
    require(n >= 5, family, "n >= 5 required");
    add(power(kW01, 4));
    add(pow2(kW12, n - 3));
    add(concat(commutator(power(kW01, 2), Word{kR2}), pow2(kW21, n - 4)));
  } else if (family == "H5") {
    need(1);
    long n = params[0];
    require(n >= 5, family, "n >= 5 required");
    add(power(kW01, 8));
    add(pow2(kW12, n - 3));
    add(commutator(power(kW01, 2), Word{kR2}));
    add(concat(power(kW01, 4), pow2(kW12, n - 4)));
  } else if (family == "H6") {
    need(1);
    long n = params[0];
    require(n >= 5, family, "n >= 5 required");
    add(power(kW01, 8));
    add(pow2(kW12, n - 3));
    add(concat(power(kW01, 4), pow2(kW12, n - 4)));
    add(concat(commutator(power(kW01, 2), Word{kR2}), power(kW01, 4)));
  } else {
    throw std::invalid_argument("unknown preset family: " + family);
  }

  Presentation p;
  p.relators = std::move(rel);
  p.family_tag = tag(family, params);
  return p;
}

std::string presentation_to_text(const Presentation& p) {
  std::ostringstream os;
  if (!p.family_tag.empty()) os << "# family: " << p.family_tag << "\n";
  for (const Word& r : p.relators) os << word_to_string(r) << "\n";
  return os.str();
}

Presentation presentation_from_text(const std::string& text) {
  Presentation p;
  std::istringstream is(text);
  std::string line;
  std::vector<Word> rels;
  while (std::getline(is, line)) {
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') {
      size_t f = line.find("family:", start);
      if (f != std::string::npos) {
        size_t v = line.find_first_not_of(" \t", f + 7);
        if (v != std::string::npos) p.family_tag = line.substr(v);
      }
      continue;
    }
    rels.push_back(flatten(parse_relator(line)));
  }
  Presentation built = presentation_from_relators(std::move(rels), p.family_tag);
  return built;
}

}  // namespace regmaps
