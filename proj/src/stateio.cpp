#include "locc/stateio.hpp"

#include "json.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace locc {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t first = 0;
  std::size_t last = s.size();
  while (first < last && std::isspace(static_cast<unsigned char>(s[first]))) ++first;
  while (last > first && std::isspace(static_cast<unsigned char>(s[last - 1]))) --last;
  return s.substr(first, last - first);
}

std::vector<std::string> tokens_from_json_array(const std::string& text,
                                                const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    raise(errc::parse_error, "state file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_array())
    raise(errc::parse_error, "state file '" + path + "' must hold a JSON array of strings");
  std::vector<std::string> out;
  out.reserve(doc.size());
  for (const auto& item : doc) {
    if (item.is_string())
      out.push_back(item.get<std::string>());
    else if (item.is_number())
      out.push_back(item.dump()); // numeric literals keep their decimal text
    else
      raise(errc::parse_error,
            "state file '" + path + "' holds a non-coefficient entry: " + item.dump());
  }
  return out;
}

} // namespace

std::vector<std::string> split_coefficient_list(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  std::stringstream stream(text);
  while (std::getline(stream, current, ',')) {
    const std::string token = trimmed(current);
    if (token.empty()) raise(errc::parse_error, "empty coefficient in list: '" + text + "'");
    out.push_back(token);
  }
  if (out.empty()) raise(errc::parse_error, "empty coefficient list");
  return out;
}

std::vector<std::string> load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::parse_error, "cannot open state file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();

  const std::string body = trimmed(content);
  if (!body.empty() && body.front() == '[') return tokens_from_json_array(body, path);

  std::vector<std::string> out;
  std::stringstream lines(content);
  std::string line;
  while (std::getline(lines, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string token = trimmed(line);
    if (!token.empty()) out.push_back(token);
  }
  if (out.empty()) raise(errc::parse_error, "state file '" + path + "' holds no coefficients");
  return out;
}

std::vector<std::string> state_tokens(const std::string& argument) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(argument, ec)) return load_state_file(argument);
  return split_coefficient_list(argument);
}

} // namespace locc
