#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

#include "json.hpp"
#include "lenslab/lens.hpp"

namespace lenslab {

inline std::optional<std::vector<Rational>> DiskCache::load(const LensSpace& space) const {
  std::ifstream in(file_for(space));
  if (!in) return std::nullopt;
  try {
    const auto doc = nlohmann::json::parse(in);
    if (doc.value("format", std::string()) != kFormat) return std::nullopt;
    if (doc.at("p").get<std::int64_t>() != space.p() || doc.at("q").get<std::int64_t>() != space.q())
      return std::nullopt;
    std::vector<Rational> values;
    for (const auto& v : doc.at("d")) values.push_back(Rational::parse(v.get<std::string>()));
    return values;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entry: recompute and overwrite
  }
}

inline void DiskCache::store(const LensSpace& space, const std::vector<Rational>& values) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw DomainError("cannot create cache directory " + dir_.string() + ": " + ec.message());

  nlohmann::json doc;
  doc["format"] = kFormat;
  doc["p"] = space.p();
  doc["q"] = space.q();
  auto& d = doc["d"] = nlohmann::json::array();
  for (const auto& v : values) d.push_back(v.str());

  // Write then rename so readers never observe a partial file.
  std::random_device rd;
  const auto target = file_for(space);
  auto tmp = target;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp);
    if (!out) throw DomainError("cannot write cache file " + tmp.string());
    out << doc.dump() << '\n';
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw DomainError("cannot install cache file " + target.string());
  }
}

}  // namespace lenslab
