#ifndef FRAGWL_SMILES_HPP
#define FRAGWL_SMILES_HPP

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fragwl/graph.hpp"

namespace fragwl {

/// Bond orders used as edge labels.
enum class BondOrder : Label { Single = 1, Double = 2, Triple = 3, Aromatic = 4 };

struct Atom {
  int element = 0;  // atomic number
  bool aromatic = false;
  int charge = 0;
  bool in_bracket = false;
};

/// Injective packing of (element, aromatic, charge) into a node label.
Label atom_label(const Atom& atom);
Atom atom_from_label(Label label);
/// Element symbol for an atomic number, "?" when out of range.
std::string_view element_symbol(int atomic_number);

class SmilesError : public std::runtime_error {
 public:
  SmilesError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Heavy-atom graph of a SMILES string. Hydrogens stay implicit; bond orders
/// become edge labels. Stereochemistry, isotopes and atom classes are rejected.
Graph parse_smiles(std::string_view smiles);

struct CorpusEntry {
  std::size_t line = 0;
  std::string smiles;
  Graph graph;
};

struct CorpusError {
  std::size_t line = 0;
  std::size_t offset = 0;
  std::string message;
};

struct CorpusParse {
  std::vector<CorpusEntry> graphs;
  std::vector<CorpusError> errors;
};

/// One SMILES per line (first whitespace/comma-separated token). Blank lines
/// and a leading "smiles" header are skipped; per-line failures are collected.
/// Throws std::runtime_error when the file cannot be read.
CorpusParse parse_corpus(const std::filesystem::path& path);
CorpusParse parse_corpus_text(std::string_view text);

}  // namespace fragwl

#endif  // FRAGWL_SMILES_HPP
