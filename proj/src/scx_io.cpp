#include "unavoidable/scx_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "unavoidable/errors.hpp"

namespace unav {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

int parse_int(std::string_view word, int line_no) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                     std::string(word) + "'");
  }
  return value;
}

}  // namespace

SimplicialComplex parse_scx(std::string_view text) {
  int m = -1;
  std::vector<Subset> facets;
  int line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto words = split_words(line);
    if (words.empty()) continue;

    if (m < 0) {
      if (words.size() != 2 || words[0] != "m") {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'm <int>' header");
      }
      m = parse_int(words[1], line_no);
      if (m < 1 || m > kMaxGroundSize) {
        throw ParseError("line " + std::to_string(line_no) + ": m must lie in [1, 63]");
      }
      continue;
    }

    if (words.size() == 1 && words[0] == "-") {
      facets.emplace_back();
      continue;
    }
    Subset facet;
    for (auto w : words) {
      const int v = parse_int(w, line_no);
      if (v < 1 || v > m) {
        throw ParseError("line " + std::to_string(line_no) + ": vertex " + std::to_string(v) +
                         " outside [1, " + std::to_string(m) + "]");
      }
      if (facet.contains(v)) {
        throw ParseError("line " + std::to_string(line_no) + ": repeated vertex " +
                         std::to_string(v));
      }
      facet = facet.with(v);
    }
    facets.push_back(facet);
  }
  if (m < 0) throw ParseError("missing 'm <int>' header");
  if (facets.empty()) throw ParseError("no facets (write '-' for the complex {∅})");
  return SimplicialComplex::from_facets(m, std::move(facets));
}

std::string format_scx(const SimplicialComplex& k) {
  std::string out = "m " + std::to_string(k.ground_size()) + "\n";
  for (Subset f : k.facets()) {
    if (f.empty()) {
      out += "-\n";
      continue;
    }
    bool first = true;
    for (int v : f.members()) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

SimplicialComplex read_scx_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_scx(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace unav
