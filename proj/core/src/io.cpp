#include "orbisect/io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "orbisect/errors.hpp"

namespace orbisect::io {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// SHA-256, FIPS 180-4.
constexpr std::uint32_t kSha256Init[8] = {
    0x6a09e667u, 0xbb67ae85u, 0x3c6ef372u, 0xa54ff53au,
    0x510e527fu, 0x9b05688cu, 0x1f83d9abu, 0x5be0cd19u};

constexpr std::uint32_t kSha256K[64] = {
    0x428a2f98u, 0x71374491u, 0xb5c0fbcfu, 0xe9b5dba5u, 0x3956c25bu, 0x59f111f1u,
    0x923f82a4u, 0xab1c5ed5u, 0xd807aa98u, 0x12835b01u, 0x243185beu, 0x550c7dc3u,
    0x72be5d74u, 0x80deb1feu, 0x9bdc06a7u, 0xc19bf174u, 0xe49b69c1u, 0xefbe4786u,
    0x0fc19dc6u, 0x240ca1ccu, 0x2de92c6fu, 0x4a7484aau, 0x5cb0a9dcu, 0x76f988dau,
    0x983e5152u, 0xa831c66du, 0xb00327c8u, 0xbf597fc7u, 0xc6e00bf3u, 0xd5a79147u,
    0x06ca6351u, 0x14292967u, 0x27b70a85u, 0x2e1b2138u, 0x4d2c6dfcu, 0x53380d13u,
    0x650a7354u, 0x766a0abbu, 0x81c2c92eu, 0x92722c85u, 0xa2bfe8a1u, 0xa81a664bu,
    0xc24b8b70u, 0xc76c51a3u, 0xd192e819u, 0xd6990624u, 0xf40e3585u, 0x106aa070u,
    0x19a4c116u, 0x1e376c08u, 0x2748774cu, 0x34b0bcb5u, 0x391c0cb3u, 0x4ed8aa4au,
    0x5b9cca4fu, 0x682e6ff3u, 0x748f82eeu, 0x78a5636fu, 0x84c87814u, 0x8cc70208u,
    0x90befffau, 0xa4506cebu, 0xbef9a3f7u, 0xc67178f2u};

std::uint32_t rotr(std::uint32_t x, int n) { return (x >> n) | (x << (32 - n)); }

void sha256_block(std::uint32_t h[8], const unsigned char* p) {
  std::uint32_t w[64];
  for (int i = 0; i < 16; ++i)
    w[i] = (std::uint32_t(p[4 * i]) << 24) | (std::uint32_t(p[4 * i + 1]) << 16) |
           (std::uint32_t(p[4 * i + 2]) << 8) | std::uint32_t(p[4 * i + 3]);
  for (int i = 16; i < 64; ++i) {
    std::uint32_t s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
    std::uint32_t s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
    w[i] = w[i - 16] + s0 + w[i - 7] + s1;
  }
  std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3];
  std::uint32_t e = h[4], f = h[5], g = h[6], hh = h[7];
  for (int i = 0; i < 64; ++i) {
    std::uint32_t s1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
    std::uint32_t ch = (e & f) ^ (~e & g);
    std::uint32_t t1 = hh + s1 + ch + kSha256K[i] + w[i];
    std::uint32_t s0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
    std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
    std::uint32_t t2 = s0 + maj;
    hh = g;
    g = f;
    f = e;
    e = d + t1;
    d = c;
    c = b;
    b = a;
    a = t1 + t2;
  }
  h[0] += a; h[1] += b; h[2] += c; h[3] += d;
  h[4] += e; h[5] += f; h[6] += g; h[7] += hh;
}

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& ex) {
    throw InputError(std::string(what) + ": malformed JSON: " + ex.what());
  }
}

std::vector<long long> cells_by_dim(const std::vector<std::vector<int>>& simplices) {
  std::vector<long long> out;
  for (const auto& s : simplices) {
    const size_t dim = s.size() - 1;
    if (out.size() <= dim) out.resize(dim + 1, 0);
    ++out[dim];
  }
  return out;
}

ordered_json inputs_json(const InputStamp& in) {
  ordered_json j;
  ordered_json space;
  space["path"] = in.space_path;
  space["sha256"] = in.space_hash;
  j["space"] = std::move(space);
  ordered_json group;
  group["path"] = in.group_path;
  group["sha256"] = in.group_hash;
  j["group"] = std::move(group);
  if (!in.gamma_name.empty()) {
    ordered_json gamma;
    gamma["name"] = in.gamma_name;
    if (!in.gamma_path.empty()) gamma["path"] = in.gamma_path;
    gamma["sha256"] = in.gamma_hash;
    j["gamma"] = std::move(gamma);
  }
  return j;
}

ordered_json envelope(const char* type, const InputStamp& in) {
  ordered_json j;
  j["tool"] = "orbisect";
  j["report"] = type;
  j["inputs"] = inputs_json(in);
  return j;
}

ordered_json census_json(const ComponentCensus& c) {
  ordered_json j;
  j["cells_per_dim"] = c.cells_per_dim;
  j["isotropy_orders"] = c.isotropy_orders;
  j["chi"] = c.chi;
  return j;
}

std::string finish(const ordered_json& j) { return j.dump(2) + "\n"; }

int component_count(const std::vector<int>& component_ids) {
  int n = 0;
  for (int c : component_ids) n = std::max(n, c + 1);
  return n;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  if (in.bad()) throw InputError("cannot read file: " + path);
  return std::move(out).str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write file: " + tmp);
    out << content;
    out.flush();
    if (!out) throw InputError("cannot write file: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw InputError("cannot move report into place: " + path);
  }
}

std::string sha256_hex(std::string_view data) {
  std::uint32_t h[8];
  std::memcpy(h, kSha256Init, sizeof(h));
  const auto* p = reinterpret_cast<const unsigned char*>(data.data());
  size_t n = data.size();
  while (n >= 64) {
    sha256_block(h, p);
    p += 64;
    n -= 64;
  }
  unsigned char tail[128] = {0};
  std::memcpy(tail, p, n);
  tail[n] = 0x80;
  const size_t tail_len = (n < 56) ? 64 : 128;
  const std::uint64_t bits = std::uint64_t(data.size()) * 8;
  for (int i = 0; i < 8; ++i)
    tail[tail_len - 1 - i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xff);
  sha256_block(h, tail);
  if (tail_len == 128) sha256_block(h, tail + 64);
  static const char* hex = "0123456789abcdef";
  std::string out(64, '0');
  for (int i = 0; i < 8; ++i)
    for (int b = 0; b < 4; ++b) {
      unsigned char byte = (h[i] >> (8 * (3 - b))) & 0xff;
      out[8 * i + 2 * b] = hex[byte >> 4];
      out[8 * i + 2 * b + 1] = hex[byte & 0xf];
    }
  return out;
}

FiniteGroup group_from_json(const std::string& text) {
  auto j = parse_json(text, "group");
  try {
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    if (j.contains("table")) {
      auto table = j.at("table").get<std::vector<std::vector<int>>>();
      if (j.contains("order") &&
          j.at("order").get<size_t>() != table.size())
        throw InputError("group: \"order\" does not match the table size");
      return FiniteGroup::from_table(std::move(table), std::move(labels));
    }
    if (j.contains("degree") && j.contains("generators")) {
      return FiniteGroup::from_permutations(
          j.at("degree").get<int>(),
          j.at("generators").get<std::vector<std::vector<int>>>(), std::move(labels));
    }
  } catch (const json::exception& ex) {
    throw InputError(std::string("group: ") + ex.what());
  }
  throw InputError("group: needs \"table\" or \"degree\" + \"generators\"");
}

EquivariantComplex complex_from_json(const std::string& text, const FiniteGroup& g) {
  auto j = parse_json(text, "complex");
  try {
    auto c = complex_from_maximal(
        j.at("vertices").get<int>(),
        j.at("maximal_simplices").get<std::vector<std::vector<int>>>());
    const auto& action = j.at("action");
    if (action.contains("generators")) {
      if (!g.from_permutation_form())
        throw InputError(
            "complex: action \"generators\" needs a permutation-built group; "
            "use action \"elements\" with a table group");
      return action_from_generator_perms(
          std::move(c), g, action.at("generators").get<std::vector<std::vector<int>>>());
    }
    if (action.contains("elements"))
      return make_equivariant(std::move(c), g,
                              action.at("elements").get<std::vector<std::vector<int>>>());
  } catch (const json::exception& ex) {
    throw InputError(std::string("complex: ") + ex.what());
  }
  throw InputError("complex: action needs \"generators\" or \"elements\"");
}

GroupPresentation presentation_from_json(const std::string& text) {
  auto j = parse_json(text, "presentation");
  GroupPresentation p;
  try {
    p.num_generators = j.at("generators").get<int>();
    if (j.contains("relators"))
      p.relators = j.at("relators").get<std::vector<std::vector<int>>>();
    p.name = j.value("name", std::string());
  } catch (const json::exception& ex) {
    throw InputError(std::string("presentation: ") + ex.what());
  }
  p.validate();
  return p;
}

GammaInput parse_gamma(const std::string& token) {
  static const std::regex zk(R"(^Z(?:k:|\^)?([1-9][0-9]*)$)");
  static const std::regex fk(R"(^F(?:k:)?([1-9][0-9]*)$)");
  static const std::regex cn(R"(^C:?([1-9][0-9]*)$)");
  static const std::regex dn(R"(^D:?([1-9][0-9]*)$)");

  GammaInput in;
  std::smatch m;
  if (token == "Z")
    in.presentation = presentation::integers();
  else if (std::regex_match(token, m, zk))
    in.presentation = presentation::free_abelian(std::stoi(m[1]));
  else if (std::regex_match(token, m, fk))
    in.presentation = presentation::free_group(std::stoi(m[1]));
  else if (std::regex_match(token, m, cn))
    in.presentation = presentation::cyclic(std::stoi(m[1]));
  else if (std::regex_match(token, m, dn))
    in.presentation = presentation::dihedral(std::stoi(m[1]));
  else {
    const std::string text = read_file(token);
    in.presentation = presentation_from_json(text);
    in.path = token;
    in.hash = sha256_hex(text);
    return in;
  }
  ordered_json canon;
  canon["generators"] = in.presentation.num_generators;
  canon["relators"] = in.presentation.relators;
  canon["name"] = in.presentation.name;
  in.hash = sha256_hex(canon.dump());
  return in;
}

std::string sector_report(const InputStamp& in, const SectorDecomposition& d,
                          const std::vector<HomClass>& classes, bool include_refined) {
  auto j = envelope("sectors", in);
  j["gamma"] = d.gamma_name;

  auto coarse = ordered_json::array();
  for (const auto& cs : d.coarse) {
    ordered_json row;
    row["rep"] = cs.cls.representative.images;
    row["fixed_cells"] = cells_by_dim(cs.sector.space.simplices);
    row["centralizer_order"] = cs.cls.centralizer.order();
    coarse.push_back(std::move(row));
  }
  j["coarse"] = std::move(coarse);

  if (include_refined) {
    auto refined = ordered_json::array();
    for (const auto& r : d.refined) {
      ordered_json row;
      row["class"] = r.class_id;
      row["component"] = r.component_id;
      row["chi"] = r.chi;
      row["isotropy_orders"] = r.isotropy_orders;
      row["projection"] = r.projection;
      refined.push_back(std::move(row));
    }
    j["refined"] = std::move(refined);
    auto poset = ordered_json::array();
    for (const auto& row : sector_poset(d)) poset.push_back(row);
    j["poset"] = std::move(poset);
  }

  ordered_json diag;
  diag["subdivisions"] = d.subdivisions;
  diag["hom_count"] = d.hom_count;
  auto hom_classes = ordered_json::array();
  for (const auto& cls : classes) {
    ordered_json row;
    row["rep"] = cls.representative.images;
    row["size"] = cls.members.size();
    row["centralizer_order"] = cls.centralizer.order();
    row["image_order"] = cls.image.order();
    hom_classes.push_back(std::move(row));
  }
  diag["hom_classes"] = std::move(hom_classes);
  diag["dropped_empty_classes"] = d.dropped_empty_classes;
  diag["base_cells"] = d.base.cells_per_dim;
  diag["base_components"] = component_count(d.base_components);
  diag["coarse_count"] = d.coarse.size();
  diag["refined_count"] = d.refined.size();
  j["diagnostics"] = std::move(diag);
  return finish(j);
}

std::string euler_report(const InputStamp& in, const EulerReport& r,
                         const Rational& orbifold_total) {
  auto j = envelope("euler", in);
  j["gamma"] = r.gamma_name;
  j["sector_sum"] = r.sector_sum;
  j["oracle"] = r.oracle ? ordered_json(r.oracle->str()) : ordered_json(nullptr);
  j["agree"] = r.agree;
  ordered_json diag;
  diag["subdivisions"] = r.subdivisions;
  diag["oracle_integral"] = r.oracle_integral;
  diag["orbifold_total"] = orbifold_total.str();
  j["diagnostics"] = std::move(diag);
  return finish(j);
}

std::string leida_report(const InputStamp& in, const LeidaDecomposition& l,
                         const SectorDecomposition& d,
                         const std::vector<SectorCovering>& covering) {
  auto j = envelope("leida", in);
  j["gamma"] = d.gamma_name;
  auto sectors = ordered_json::array();
  for (const auto& s : l.sectors) {
    ordered_json row;
    row["subgroup"] = s.subgroup.elements;
    row["subgroup_order"] = s.subgroup.order();
    row["normalizer_order"] = s.normalizer.order();
    row["components"] = s.num_components;
    auto census = ordered_json::array();
    for (const auto& c : s.census) census.push_back(census_json(c));
    row["census"] = std::move(census);
    row["projection"] = s.projection;
    sectors.push_back(std::move(row));
  }
  j["sectors"] = std::move(sectors);
  auto cov = ordered_json::array();
  for (const auto& c : covering) {
    ordered_json row;
    row["class"] = c.class_id;
    row["rep"] = d.coarse[c.class_id].cls.representative.images;
    row["subgroup_class"] = c.subgroup_class;
    row["index"] = c.covering_index;
    cov.push_back(std::move(row));
  }
  j["covering"] = std::move(cov);
  ordered_json diag;
  diag["subdivisions"] = l.subdivisions;
  diag["base_cells"] = l.base.cells_per_dim;
  diag["sector_count"] = l.sectors.size();
  j["diagnostics"] = std::move(diag);
  return finish(j);
}

std::string covers_report(const InputStamp& in, const CoversResult& r) {
  auto j = envelope("covers", in);
  j["gamma"] = in.gamma_name;
  j["covers"] = r.covers;
  auto witnesses = ordered_json::array();
  for (const auto& w : r.witnesses) {
    ordered_json row;
    row["subgroup"] = w.subgroup.elements;
    row["images"] = w.witness_images;
    witnesses.push_back(std::move(row));
  }
  j["witnesses"] = std::move(witnesses);
  j["refuter"] = r.refuter ? ordered_json(r.refuter->elements) : ordered_json(nullptr);
  ordered_json diag;
  diag["subdivisions"] = r.subdivisions;
  diag["subgroups_considered"] = r.witnesses.size() + (r.refuter ? 1 : 0);
  j["diagnostics"] = std::move(diag);
  return finish(j);
}

std::string certificate_report(const InputStamp& in, const Certificate& c) {
  auto j = envelope("certificate", in);
  j["check"] = c.check;
  j["ok"] = c.ok;
  ordered_json counts;
  for (const auto& [key, value] : c.counts) counts[key] = value;
  j["counts"] = std::move(counts);
  j["counterexample"] =
      c.counterexample.empty() ? ordered_json(nullptr) : ordered_json(c.counterexample);
  ordered_json diag;
  diag["subdivisions"] = c.subdivisions;
  j["diagnostics"] = std::move(diag);
  return finish(j);
}

}  // namespace orbisect::io
