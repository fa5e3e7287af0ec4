#include "reexp/sequence_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "json.hpp"

namespace reexp {

using nlohmann::json;

std::string to_sequence_json(const CoeffND& a) {
  json doc;
  doc["dims"] = std::vector<std::size_t>(a.dims().begin(), a.dims().end());
  doc["offsets"] = std::vector<Index>(a.offsets().begin(), a.offsets().end());
  json values = json::array();
  for (const auto& v : a.values()) values.push_back({v.real(), v.imag()});
  doc["values"] = std::move(values);
  return doc.dump() + "\n";
}

CoeffND from_sequence_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("sequence file is not valid JSON: ") + e.what());
  }
  try {
    auto dims = doc.at("dims").get<std::vector<std::size_t>>();
    auto offsets = doc.at("offsets").get<std::vector<Index>>();
    std::vector<Complex> values;
    for (const auto& entry : doc.at("values")) {
      if (entry.is_number()) {
        values.emplace_back(entry.get<double>(), 0.0);
      } else {
        if (!entry.is_array() || entry.size() != 2)
          throw std::runtime_error("each value must be [re, im]");
        values.emplace_back(entry[0].get<double>(), entry[1].get<double>());
      }
    }
    return CoeffND(std::move(dims), std::move(offsets), std::move(values));
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed sequence file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("malformed sequence file: ") + e.what());
  }
}

CoeffND read_sequence_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read sequence file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return from_sequence_json(buf.str());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void write_text_atomically(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

void write_sequence_file(const std::filesystem::path& path, const CoeffND& a) {
  write_text_atomically(path, to_sequence_json(a));
}

}  // namespace reexp
