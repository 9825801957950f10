#include "fragwl/smiles.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace fragwl {

namespace {

constexpr std::array<std::string_view, 119> kElements = {
    "?",  "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na", "Mg", "Al", "Si",
    "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",  "Cr", "Mn", "Fe", "Co", "Ni", "Cu",
    "Zn", "Ga", "Ge", "As", "Se", "Br", "Kr", "Rb", "Sr", "Y",  "Zr", "Nb", "Mo", "Tc", "Ru",
    "Rh", "Pd", "Ag", "Cd", "In", "Sn", "Sb", "Te", "I",  "Xe", "Cs", "Ba", "La", "Ce", "Pr",
    "Nd", "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb", "Lu", "Hf", "Ta", "W",
    "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi", "Po", "At", "Rn", "Fr", "Ra", "Ac",
    "Th", "Pa", "U",  "Np", "Pu", "Am", "Cm", "Bk", "Cf", "Es", "Fm", "Md", "No", "Lr", "Rf",
    "Db", "Sg", "Bh", "Hs", "Mt", "Ds", "Rg", "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og"};

std::optional<int> element_number(std::string_view symbol) {
  for (std::size_t z = 1; z < kElements.size(); ++z) {
    if (kElements[z] == symbol) return static_cast<int>(z);
  }
  return std::nullopt;
}

constexpr int kMaxCharge = 15;

struct PendingRing {
  int atom;
  std::optional<BondOrder> bond;
  std::size_t offset;
};

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Graph run() {
    if (s_.empty()) throw SmilesError("empty SMILES", 0);
    while (pos_ < s_.size()) step();
    if (pending_bond_) throw SmilesError("dangling bond", pending_bond_offset_);
    if (!branches_.empty()) throw SmilesError("unbalanced parentheses: unclosed '('", branches_.back().second);
    if (!rings_.empty()) {
      throw SmilesError("unmatched ring-closure digit " + std::to_string(rings_.begin()->first),
                        rings_.begin()->second.offset);
    }
    if (atoms_.empty()) throw SmilesError("no atoms", 0);
    std::vector<Label> labels;
    labels.reserve(atoms_.size());
    for (const Atom& a : atoms_) labels.push_back(atom_label(a));
    std::vector<Edge> edges;
    EdgeLabelMap elabels;
    for (const auto& [uv, order] : bonds_) {
      edges.push_back({uv.first, uv.second});
      elabels[uv] = static_cast<Label>(order);
    }
    return build_graph(edges, std::move(labels), &elabels);
  }

 private:
  void step() {
    const std::size_t at = pos_;
    const char c = s_[pos_];
    switch (c) {
      case '(':
        if (prev_ < 0) throw SmilesError("branch without a preceding atom", at);
        if (pending_bond_) throw SmilesError("bond before '('", at);
        branches_.emplace_back(prev_, at);
        ++pos_;
        return;
      case ')':
        if (branches_.empty()) throw SmilesError("unbalanced parentheses: unexpected ')'", at);
        if (pending_bond_) throw SmilesError("dangling bond before ')'", at);
        prev_ = branches_.back().first;
        branches_.pop_back();
        ++pos_;
        return;
      case '-': set_bond(BondOrder::Single, at); return;
      case '=': set_bond(BondOrder::Double, at); return;
      case '#': set_bond(BondOrder::Triple, at); return;
      case ':': set_bond(BondOrder::Aromatic, at); return;
      case '/':
      case '\\':
        throw SmilesError("unsupported feature: directional bond (stereo)", at);
      case '$':
        throw SmilesError("unsupported feature: quadruple bond", at);
      case '.':
        if (pending_bond_) throw SmilesError("bond before '.'", at);
        prev_ = -1;
        ++pos_;
        return;
      case '%': {
        if (pos_ + 2 >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])) ||
            !std::isdigit(static_cast<unsigned char>(s_[pos_ + 2]))) {
          throw SmilesError("'%' must be followed by two digits", at);
        }
        int number = (s_[pos_ + 1] - '0') * 10 + (s_[pos_ + 2] - '0');
        pos_ += 3;
        ring_closure(number, at);
        return;
      }
      case '[':
        add_atom(bracket_atom(), at);
        return;
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ++pos_;
      ring_closure(c - '0', at);
      return;
    }
    add_atom(organic_atom(), at);
  }

  void set_bond(BondOrder order, std::size_t at) {
    if (pending_bond_) throw SmilesError("two consecutive bond symbols", at);
    if (prev_ < 0) throw SmilesError("bond without a preceding atom", at);
    pending_bond_ = order;
    pending_bond_offset_ = at;
    ++pos_;
  }

  BondOrder default_bond(int a, int b) const {
    return (atoms_[a].aromatic && atoms_[b].aromatic) ? BondOrder::Aromatic : BondOrder::Single;
  }

  void connect(int a, int b, BondOrder order, std::size_t at) {
    if (a == b) throw SmilesError("ring closure onto the same atom", at);
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    if (bonds_.contains(key)) throw SmilesError("duplicate bond", at);
    bonds_.emplace(key, order);
  }

  void ring_closure(int number, std::size_t at) {
    if (prev_ < 0) throw SmilesError("ring-closure digit without a preceding atom", at);
    auto it = rings_.find(number);
    if (it == rings_.end()) {
      rings_.emplace(number, PendingRing{prev_, pending_bond_, at});
      pending_bond_.reset();
      return;
    }
    std::optional<BondOrder> order = it->second.bond;
    if (pending_bond_) {
      if (order && *order != *pending_bond_) throw SmilesError("conflicting ring-closure bonds", at);
      order = pending_bond_;
    }
    connect(it->second.atom, prev_, order.value_or(default_bond(it->second.atom, prev_)), at);
    rings_.erase(it);
    pending_bond_.reset();
  }

  void add_atom(const Atom& atom, std::size_t at) {
    atoms_.push_back(atom);
    const int idx = static_cast<int>(atoms_.size()) - 1;
    if (prev_ >= 0) connect(prev_, idx, pending_bond_.value_or(default_bond(prev_, idx)), at);
    pending_bond_.reset();
    prev_ = idx;
  }

  Atom organic_atom() {
    const std::size_t at = pos_;
    const char c = s_[pos_];
    auto next = [&](char x) { return pos_ + 1 < s_.size() && s_[pos_ + 1] == x; };
    Atom a;
    switch (c) {
      case 'B':
        if (next('r')) {
          a.element = 35;
          pos_ += 2;
          return a;
        }
        a.element = 5;
        break;
      case 'C':
        if (next('l')) {
          a.element = 17;
          pos_ += 2;
          return a;
        }
        a.element = 6;
        break;
      case 'N': a.element = 7; break;
      case 'O': a.element = 8; break;
      case 'P': a.element = 15; break;
      case 'S': a.element = 16; break;
      case 'F': a.element = 9; break;
      case 'I': a.element = 53; break;
      case 'b': a.element = 5; a.aromatic = true; break;
      case 'c': a.element = 6; a.aromatic = true; break;
      case 'n': a.element = 7; a.aromatic = true; break;
      case 'o': a.element = 8; a.aromatic = true; break;
      case 'p': a.element = 15; a.aromatic = true; break;
      case 's': a.element = 16; a.aromatic = true; break;
      case '@':
        throw SmilesError("unsupported feature: chirality", at);
      default:
        throw SmilesError(std::string("unknown atom symbol '") +
                              (std::isprint(static_cast<unsigned char>(c)) ? std::string(1, c) : std::string("\\x?")) +
                              "'",
                          at);
    }
    ++pos_;
    return a;
  }

  Atom bracket_atom() {
    const std::size_t open = pos_;
    ++pos_;  // '['
    auto peek = [&]() -> char { return pos_ < s_.size() ? s_[pos_] : '\0'; };
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      throw SmilesError("unsupported feature: isotope", pos_);
    }
    Atom a;
    a.in_bracket = true;
    const char c = peek();
    if (c == '\0') throw SmilesError("unterminated bracket atom", open);
    if (std::isupper(static_cast<unsigned char>(c))) {
      std::optional<int> z;
      if (pos_ + 1 < s_.size() && std::islower(static_cast<unsigned char>(s_[pos_ + 1]))) {
        z = element_number(s_.substr(pos_, 2));
        if (z) pos_ += 2;
      }
      if (!z) {
        z = element_number(s_.substr(pos_, 1));
        if (!z) throw SmilesError("unknown atom symbol in bracket", pos_);
        ++pos_;
      }
      a.element = *z;
    } else if (std::islower(static_cast<unsigned char>(c))) {
      static const std::map<std::string_view, int> aromatic = {
          {"se", 34}, {"as", 33}, {"te", 52}, {"b", 5}, {"c", 6}, {"n", 7}, {"o", 8}, {"p", 15}, {"s", 16}};
      bool found = false;
      for (std::size_t len : {2u, 1u}) {
        if (pos_ + len > s_.size()) continue;
        auto it = aromatic.find(s_.substr(pos_, len));
        if (it != aromatic.end()) {
          a.element = it->second;
          a.aromatic = true;
          pos_ += len;
          found = true;
          break;
        }
      }
      if (!found) throw SmilesError("unknown aromatic atom symbol in bracket", pos_);
    } else {
      throw SmilesError("unknown atom symbol in bracket", pos_);
    }
    if (peek() == '@') throw SmilesError("unsupported feature: chirality", pos_);
    if (peek() == 'H') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (peek() == '+' || peek() == '-') {
      const char sign = peek();
      const std::size_t charge_at = pos_;
      ++pos_;
      int magnitude = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        magnitude = 0;
        int digits = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          magnitude = magnitude * 10 + (peek() - '0');
          ++pos_;
          if (++digits > 2) throw SmilesError("charge out of range", charge_at);
        }
      } else {
        while (peek() == sign) {
          ++magnitude;
          ++pos_;
        }
      }
      if (magnitude > kMaxCharge) throw SmilesError("charge out of range", charge_at);
      a.charge = sign == '+' ? magnitude : -magnitude;
    }
    if (peek() == ':') throw SmilesError("unsupported feature: atom class", pos_);
    if (peek() != ']') {
      if (peek() == '\0') throw SmilesError("unterminated bracket atom", open);
      throw SmilesError("unexpected character in bracket atom", pos_);
    }
    ++pos_;
    return a;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int prev_ = -1;
  std::optional<BondOrder> pending_bond_;
  std::size_t pending_bond_offset_ = 0;
  std::vector<std::pair<int, std::size_t>> branches_;
  std::map<int, PendingRing> rings_;
  std::vector<Atom> atoms_;
  std::map<std::pair<int, int>, BondOrder> bonds_;
};

std::string_view first_token(std::string_view line) {
  auto begin = line.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  auto end = line.find_first_of(" \t\r,", begin);
  return line.substr(begin, end == std::string_view::npos ? std::string_view::npos : end - begin);
}

}  // namespace

Label atom_label(const Atom& atom) {
  return (static_cast<Label>(atom.element) * 2 + (atom.aromatic ? 1 : 0)) * 64 +
         (atom.charge + 32);
}

Atom atom_from_label(Label label) {
  Atom a;
  a.charge = static_cast<int>(label % 64) - 32;
  const Label rest = label / 64;
  a.aromatic = (rest % 2) == 1;
  a.element = static_cast<int>(rest / 2);
  return a;
}

std::string_view element_symbol(int atomic_number) {
  if (atomic_number <= 0 || atomic_number >= static_cast<int>(kElements.size())) return "?";
  return kElements[static_cast<std::size_t>(atomic_number)];
}

Graph parse_smiles(std::string_view smiles) { return Parser(smiles).run(); }

CorpusParse parse_corpus_text(std::string_view text) {
  CorpusParse out;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++lineno;
    start = end + 1;
    std::string_view token = first_token(line);
    if (token.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (lineno == 1 && (token == "smiles" || token == "SMILES")) continue;
    try {
      out.graphs.push_back({lineno, std::string(token), parse_smiles(token)});
    } catch (const SmilesError& e) {
      out.errors.push_back({lineno, e.offset(), e.what()});
    }
    if (end == text.size()) break;
  }
  return out;
}

CorpusParse parse_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read corpus file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_corpus_text(buf.str());
}

}  // namespace fragwl
