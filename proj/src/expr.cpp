#include "loopbv/expr.hpp"

#include <cctype>
#include <vector>

#include "loopbv/errors.hpp"

namespace loopbv {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool looks_like_rational(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  return !s.empty() && std::isdigit(static_cast<unsigned char>(s[0]));
}

long long parse_exponent(std::string_view s, std::string_view factor) {
  if (s.empty()) throw SchemaError("empty exponent in '" + std::string(factor) + "'");
  bool neg = false;
  size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i >= s.size()) throw SchemaError("bad exponent in '" + std::string(factor) + "'");
  long long v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw SchemaError("bad exponent in '" + std::string(factor) + "'");
    v = v * 10 + (s[i] - '0');
    if (v > 1000000) throw SchemaError("exponent out of range in '" + std::string(factor) + "'");
  }
  return neg ? -v : v;
}

}  // namespace

Element parse_monomial_expression(const SigPtr& sig, std::string_view text) {
  std::vector<std::string_view> tokens;
  {
    std::string_view rest = text;
    while (true) {
      auto pos = rest.find('*');
      tokens.push_back(trim(rest.substr(0, pos)));
      if (pos == std::string_view::npos) break;
      rest = rest.substr(pos + 1);
    }
  }
  if (tokens.empty() || (tokens.size() == 1 && tokens[0].empty()))
    throw SchemaError("empty monomial expression");

  Element acc = Element::unit(sig);
  bool first = true;
  for (std::string_view tok : tokens) {
    if (tok.empty()) throw SchemaError("empty factor in '" + std::string(text) + "'");
    if (looks_like_rational(tok)) {
      if (!first)
        throw SchemaError("rational coefficient must lead the expression: '" + std::string(text) +
                          "'");
      acc *= parse_rational(tok);
      first = false;
      continue;
    }
    first = false;
    if (tok == "1") continue;
    std::string_view name = tok;
    long long exp = 1;
    if (auto pos = tok.find('^'); pos != std::string_view::npos) {
      name = trim(tok.substr(0, pos));
      exp = parse_exponent(trim(tok.substr(pos + 1)), tok);
    }
    const int id = sig->find(name);
    if (id >= 0) {
      const std::pair<int, long long> word[] = {{id, exp}};
      acc = acc * normalize(sig, 1, word);
      continue;
    }
    const TableFactor* table = sig->table();
    const int cls = table ? table->find(name) : -1;
    if (cls < 0)
      throw SchemaError("unknown generator '" + std::string(name) + "' in '" + std::string(text) +
                        "'");
    if (exp < 0)
      throw SchemaError("negative exponent on manifold class '" + std::string(name) + "'");
    Monomial cm = sig->unit_monomial();
    cm.cls = static_cast<uint16_t>(cls);
    const Element factor = Element::monomial(sig, cm);
    for (long long i = 0; i < exp; ++i) acc = acc * factor;
  }
  return acc;
}

}  // namespace loopbv
