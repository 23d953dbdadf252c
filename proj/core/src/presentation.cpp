#include "chisini/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "chisini/error.hpp"

namespace chisini {

marked_presentation marked_presentation::braid3() {
  marked_presentation p;
  p.generators = {"a", "b"};
  p.relators = {word{{1, 2, 1, -2, -1, -2}}};  // aba (bab)^-1
  p.geometric = {word{{1}}, word{{2}}};
  p.cusps = {{word{{1}}, word{{2}}}};
  return p;
}

namespace {

[[noreturn]] void bad(std::size_t line_no, const std::string& what) {
  raise(fault::parse_error, "line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

int letter_index(const marked_presentation& pres, std::string tok, std::size_t line_no) {
  bool inverted = false;
  if (!tok.empty() && tok.back() == '\'') {
    inverted = true;
    tok.pop_back();
  }
  auto it = std::find(pres.generators.begin(), pres.generators.end(), tok);
  if (tok.empty() || it == pres.generators.end()) {
    bad(line_no, "unknown generator '" + tok + "'");
  }
  int idx = static_cast<int>(it - pres.generators.begin()) + 1;
  return inverted ? -idx : idx;
}

word parse_word(const marked_presentation& pres, const std::vector<std::string>& tokens,
                std::size_t begin, std::size_t end, std::size_t line_no) {
  if (begin >= end) bad(line_no, "empty word");
  word w;
  for (std::size_t i = begin; i < end; ++i) {
    w.letters.push_back(letter_index(pres, tokens[i], line_no));
  }
  return w;
}

std::pair<word, word> parse_pair(const marked_presentation& pres,
                                 const std::vector<std::string>& tokens, std::size_t line_no) {
  auto comma = std::find(tokens.begin() + 1, tokens.end(), ",");
  if (comma == tokens.end()) bad(line_no, "expected two words separated by ','");
  std::size_t split = static_cast<std::size_t>(comma - tokens.begin());
  return {parse_word(pres, tokens, 1, split, line_no),
          parse_word(pres, tokens, split + 1, tokens.size(), line_no)};
}

}  // namespace

marked_presentation parse_presentation(std::istream& in) {
  marked_presentation pres;
  bool have_generators = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& keyword = tokens.front();
    if (keyword == "generators") {
      if (have_generators) bad(line_no, "repeated generators line");
      if (tokens.size() < 2) bad(line_no, "need at least one generator");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const std::string& name = tokens[i];
        if (name.find('\'') != std::string::npos || name == ",") {
          bad(line_no, "invalid generator name '" + name + "'");
        }
        if (std::find(pres.generators.begin(), pres.generators.end(), name) !=
            pres.generators.end()) {
          bad(line_no, "duplicate generator '" + name + "'");
        }
        pres.generators.push_back(name);
      }
      have_generators = true;
      continue;
    }
    if (!have_generators) bad(line_no, "'generators' must come first");
    if (keyword == "relator") {
      pres.relators.push_back(parse_word(pres, tokens, 1, tokens.size(), line_no));
    } else if (keyword == "geometric") {
      pres.geometric.push_back(parse_word(pres, tokens, 1, tokens.size(), line_no));
    } else if (keyword == "cusp") {
      pres.cusps.push_back(parse_pair(pres, tokens, line_no));
    } else if (keyword == "node") {
      pres.nodes.push_back(parse_pair(pres, tokens, line_no));
    } else {
      bad(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  if (!have_generators) raise(fault::parse_error, "no generators line");
  return pres;
}

marked_presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(fault::parse_error, "cannot open '" + path + "'");
  return parse_presentation(in);
}

std::string word_string(const marked_presentation& pres, const word& w) {
  std::string out;
  for (int letter : w.letters) {
    std::size_t idx = static_cast<std::size_t>(letter < 0 ? -letter : letter) - 1;
    if (letter == 0 || idx >= pres.generators.size()) {
      raise(fault::index_out_of_range, "word letter outside the generator list");
    }
    if (!out.empty()) out += ' ';
    out += pres.generators[idx];
    if (letter < 0) out += '\'';
  }
  return out;
}

}  // namespace chisini
