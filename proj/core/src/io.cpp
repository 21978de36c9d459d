#include "mtclab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "mtclab/errors.hpp"

namespace mtclab {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& source, const std::string& where, const std::string& what) {
  throw InputError(source + ": " + where + ": " + what);
}

json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(source + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
}

std::int64_t get_int(const json& v, const std::string& source, const std::string& where) {
  if (!v.is_number_integer()) fail(source, where, "expected an integer");
  return v.get<std::int64_t>();
}

const json& field(const json& obj, const char* name, const std::string& source, const std::string& prefix) {
  if (!obj.is_object()) fail(source, prefix.empty() ? "top level" : prefix, "expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) fail(source, prefix + name, "missing field");
  return *it;
}

FusionRing ring_from_json(const json& j, const std::string& source, const std::string& prefix) {
  const auto rank = get_int(field(j, "rank", source, prefix), source, prefix + "rank");
  if (rank < 1 || rank > 10000) fail(source, prefix + "rank", "out of range");
  const json& dual = field(j, "dual", source, prefix);
  if (!dual.is_array()) fail(source, prefix + "dual", "expected an array");
  std::vector<ObjectIndex> duals;
  for (std::size_t i = 0; i < dual.size(); ++i)
    duals.push_back(static_cast<ObjectIndex>(get_int(dual[i], source, prefix + "dual[" + std::to_string(i) + "]")));
  const json& coeffs = field(j, "coeffs", source, prefix);
  if (!coeffs.is_array()) fail(source, prefix + "coeffs", "expected an array");
  std::vector<FusionEntry> entries;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    const std::string where = prefix + "coeffs[" + std::to_string(e) + "]";
    const json& q = coeffs[e];
    if (!q.is_array() || q.size() != 4) fail(source, where, "expected [i, j, k, n]");
    std::int64_t v[4];
    for (std::size_t t = 0; t < 4; ++t) v[t] = get_int(q[t], source, where);
    for (std::size_t t = 0; t < 3; ++t)
      if (v[t] < 0 || v[t] >= rank) fail(source, where, "index " + std::to_string(v[t]) + " out of range");
    if (v[3] < 1) fail(source, where, "coefficient must be at least 1");
    entries.push_back({static_cast<ObjectIndex>(v[0]), static_cast<ObjectIndex>(v[1]),
                       static_cast<ObjectIndex>(v[2]), v[3]});
  }
  try {
    return FusionRing(static_cast<int>(rank), std::move(duals), std::move(entries));
  } catch (const InputError& e) {
    fail(source, prefix.empty() ? "ring" : prefix.substr(0, prefix.size() - 1), e.what());
  }
}

std::string ring_body(const FusionRing& ring, const std::string& indent) {
  std::ostringstream os;
  os << "{\n" << indent << "  \"rank\": " << ring.rank() << ",\n" << indent << "  \"dual\": [";
  for (int i = 0; i < ring.rank(); ++i) os << (i ? ", " : "") << ring.dual(i);
  os << "],\n" << indent << "  \"coeffs\": [";
  auto entries = ring.entries();
  std::sort(entries.begin(), entries.end());
  bool first = true;
  for (const auto& e : entries) {
    if (e.value == 0) continue;
    os << (first ? "\n" : ",\n") << indent << "    [" << e.i << ", " << e.j << ", " << e.k << ", " << e.value << "]";
    first = false;
  }
  os << (first ? "]" : "\n" + indent + "  ]") << "\n" << indent << "}";
  return os.str();
}

}  // namespace

FusionRing parse_fusion_ring(std::string_view text, const std::string& source) {
  return ring_from_json(parse_json(text, source), source, "");
}

FusionRing read_fusion_ring(const std::filesystem::path& path) {
  return parse_fusion_ring(read_text_file(path), path.string());
}

std::string write_fusion_ring(const FusionRing& ring) { return ring_body(ring, "") + "\n"; }

ModularData parse_modular_data(std::string_view text, const std::filesystem::path& base_dir,
                               const std::string& source) {
  const json j = parse_json(text, source);
  const json& rj = field(j, "ring", source, "");
  FusionRing ring = [&] {
    if (rj.is_string()) {
      auto p = std::filesystem::path(rj.get<std::string>());
      if (p.is_relative()) p = base_dir / p;
      return read_fusion_ring(p);
    }
    return ring_from_json(rj, source, "ring.");
  }();
  const auto n = get_int(field(j, "conductor", source, ""), source, "conductor");
  if (n < 1 || n > 100000) fail(source, "conductor", "out of range");
  const json& tw = field(j, "twists", source, "");
  if (!tw.is_array()) fail(source, "twists", "expected an array");
  std::vector<std::int64_t> twists;
  for (std::size_t i = 0; i < tw.size(); ++i)
    twists.push_back(get_int(tw[i], source, "twists[" + std::to_string(i) + "]"));
  const json& sj = field(j, "S", source, "");
  if (!sj.is_array()) fail(source, "S", "expected an array");
  const auto phi = static_cast<std::size_t>(euler_phi(static_cast<int>(n)));
  SMatrix s;
  for (std::size_t a = 0; a < sj.size(); ++a) {
    if (!sj[a].is_array()) fail(source, "S[" + std::to_string(a) + "]", "expected an array");
    std::vector<Cyclotomic> row;
    for (std::size_t b = 0; b < sj[a].size(); ++b) {
      const std::string where = "S[" + std::to_string(a) + "][" + std::to_string(b) + "]";
      const json& cv = sj[a][b];
      if (!cv.is_array() || cv.size() != phi)
        fail(source, where, "expected " + std::to_string(phi) + " coefficient strings");
      std::vector<Rational> coeffs;
      for (const auto& c : cv) {
        if (!c.is_string()) fail(source, where, "coefficients must be \"p\" or \"p/q\" strings");
        try {
          coeffs.push_back(parse_rational(c.get<std::string>()));
        } catch (const InputError& e) {
          fail(source, where, e.what());
        }
      }
      row.push_back(Cyclotomic::from_basis(static_cast<int>(n), std::move(coeffs)));
    }
    s.push_back(std::move(row));
  }
  try {
    return ModularData(std::move(ring), static_cast<int>(n), std::move(twists), std::move(s));
  } catch (const InputError& e) {
    fail(source, "modular data", e.what());
  }
}

ModularData read_modular_data(const std::filesystem::path& path) {
  return parse_modular_data(read_text_file(path), path.parent_path(), path.string());
}

std::string write_modular_data(const ModularData& md) {
  std::ostringstream os;
  os << "{\n  \"ring\": " << ring_body(md.ring(), "  ") << ",\n  \"conductor\": " << md.conductor()
     << ",\n  \"twists\": [";
  for (std::size_t i = 0; i < md.twists().size(); ++i) os << (i ? ", " : "") << md.twists()[i];
  os << "],\n  \"S\": [";
  for (int a = 0; a < md.rank(); ++a) {
    os << (a ? ",\n" : "\n") << "    [";
    for (int b = 0; b < md.rank(); ++b) {
      os << (b ? ", " : "") << "[";
      const auto& c = md.s(a, b).coeffs();
      for (std::size_t t = 0; t < c.size(); ++t) os << (t ? ", " : "") << "\"" << to_string(c[t]) << "\"";
      os << "]";
    }
    os << "]";
  }
  os << "\n  ]\n}\n";
  return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path.string() + ": cannot write file");
  out << text;
}

}  // namespace mtclab
