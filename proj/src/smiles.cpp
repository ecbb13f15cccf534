#include "molcurate/smiles.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace molcurate {

namespace {

struct PendingBond {
  char symbol = 0;      // 0 = unspecified; '-', '=', '#', ':', '/', '\\'
  size_t offset = 0;
};

struct RingOpening {
  int atom = -1;
  char bond_symbol = 0;
  size_t offset = 0;
};

int bond_order_for(char symbol) {
  switch (symbol) {
    case '=': return 2;
    case '#': return 3;
    default: return 1;
  }
}

bool parse_element_token(const std::string& text, size_t& pos, int& atomic_num,
                         bool& aromatic) {
  // Two-letter organic subset first.
  if (pos + 1 < text.size()) {
    std::string two = text.substr(pos, 2);
    if (two == "Cl" || two == "Br") {
      atomic_num = elements::atomic_number(two);
      aromatic = false;
      pos += 2;
      return true;
    }
  }
  char c = text[pos];
  switch (c) {
    case 'B': case 'C': case 'N': case 'O': case 'P': case 'S':
    case 'F': case 'I':
      atomic_num = elements::atomic_number(std::string(1, c));
      aromatic = false;
      ++pos;
      return true;
    case 'b': case 'c': case 'n': case 'o': case 'p': case 's':
      atomic_num = elements::atomic_number(std::string(1, std::toupper(c)));
      aromatic = true;
      ++pos;
      return true;
    default:
      return false;
  }
}

// [isotope? symbol chirality? Hcount? charge?]  (atom-map ignored)
Atom parse_bracket_atom(const std::string& text, size_t& pos) {
  size_t open = pos;
  ++pos;  // consume '['
  Atom atom;

  while (pos < text.size() && std::isdigit(text[pos]))
    atom.isotope = atom.isotope * 10 + (text[pos++] - '0');

  if (pos >= text.size()) throw SmilesError("unterminated bracket atom", open);

  // Element symbol: uppercase + optional lowercase, or lone lowercase aromatic.
  if (std::isupper(text[pos])) {
    std::string sym(1, text[pos++]);
    if (pos < text.size() && std::islower(text[pos])) {
      std::string two = sym + text[pos];
      if (elements::atomic_number(two) != 0) {
        sym = two;
        ++pos;
      }
    }
    atom.atomic_num = elements::atomic_number(sym);
    if (atom.atomic_num == 0)
      throw SmilesError("unknown element symbol '" + sym + "'", open + 1);
  } else if (std::islower(text[pos])) {
    char c = text[pos];
    if (c == 's' && pos + 1 < text.size() && text[pos + 1] == 'e') {
      atom.atomic_num = 34;  // [se]
      pos += 2;
    } else if (c == 'a' && pos + 1 < text.size() && text[pos + 1] == 's') {
      atom.atomic_num = 33;  // [as]
      pos += 2;
    } else if (c == 'b' || c == 'c' || c == 'n' || c == 'o' || c == 'p' ||
               c == 's') {
      atom.atomic_num = elements::atomic_number(std::string(1, std::toupper(c)));
      ++pos;
    } else {
      throw SmilesError("unknown aromatic symbol", pos);
    }
    atom.aromatic = true;
  } else if (text[pos] == '*') {
    throw SmilesError("wildcard atoms not supported", pos);
  } else {
    throw SmilesError("expected element symbol", pos);
  }

  if (pos < text.size() && text[pos] == '@') {
    ++pos;
    if (pos < text.size() && text[pos] == '@') {
      atom.chirality = Chirality::Clockwise;
      ++pos;
    } else {
      atom.chirality = Chirality::Anticlockwise;
    }
  }

  if (pos < text.size() && text[pos] == 'H') {
    ++pos;
    atom.implicit_h = 1;
    if (pos < text.size() && std::isdigit(text[pos]))
      atom.implicit_h = text[pos++] - '0';
  }

  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    int sign = text[pos] == '+' ? 1 : -1;
    char mark = text[pos];
    ++pos;
    int magnitude = 1;
    if (pos < text.size() && std::isdigit(text[pos])) {
      magnitude = text[pos++] - '0';
    } else {
      while (pos < text.size() && text[pos] == mark) {
        ++magnitude;
        ++pos;
      }
    }
    atom.formal_charge = sign * magnitude;
  }

  // atom map (":n") tolerated and discarded
  if (pos < text.size() && text[pos] == ':') {
    ++pos;
    if (pos >= text.size() || !std::isdigit(text[pos]))
      throw SmilesError("malformed atom map", pos);
    while (pos < text.size() && std::isdigit(text[pos])) ++pos;
  }

  if (pos >= text.size() || text[pos] != ']')
    throw SmilesError("unterminated bracket atom", open);
  ++pos;
  return atom;
}

// Organic-subset implicit hydrogen fill. Returns -1 when no allowed
// valence can accommodate the explicit bonds.
int implicit_h_for(const Molecule& m, int ai) {
  const Atom& atom = m.atoms[ai];
  int used = m.explicit_valence(ai);
  if (atom.aromatic) {
    bool has_multiple = false;
    for (int bi : m.adj[ai])
      if (m.bonds[bi].order > 1) has_multiple = true;
    // one ring double bond is implied for aromatic B/C, and for N/P only
    // in the 2-connected (pyridine-type) case; 3-connected n is assumed
    // pyrrole-type
    bool implied_double = false;
    if (!has_multiple) {
      if (atom.atomic_num == 5 || atom.atomic_num == 6)
        implied_double = true;
      else if ((atom.atomic_num == 7 || atom.atomic_num == 15) &&
               m.degree(ai) == 2)
        implied_double = true;
    }
    if (implied_double) used += 1;
  }
  auto allowed = elements::allowed_valences(atom.atomic_num, atom.formal_charge);
  if (allowed.empty()) return 0;
  for (int v : allowed)
    if (v >= used) return v - used;
  return -1;
}

}  // namespace

Molecule parse_smiles(const std::string& text) {
  if (text.empty()) throw SmilesError("empty SMILES", 0);

  Molecule m;
  std::vector<char> bracketed;           // per atom: explicit H given
  std::vector<size_t> atom_offsets;
  std::vector<int> branch_stack;
  std::map<int, RingOpening> ring_open;
  int prev_atom = -1;
  PendingBond pending;
  bool after_dot = false;

  auto add_bond = [&](int a, int b, char symbol, size_t offset) {
    if (a == b) throw SmilesError("self bond", offset);
    for (const auto& bd : m.bonds)
      if ((bd.a == a && bd.b == b) || (bd.a == b && bd.b == a))
        throw SmilesError("duplicate bond", offset);
    Bond bd;
    bd.a = a;
    bd.b = b;
    bd.order = bond_order_for(symbol);
    if (symbol == '/') bd.dir = BondDir::Up;
    if (symbol == '\\') bd.dir = BondDir::Down;
    bool both_aromatic = m.atoms[a].aromatic && m.atoms[b].aromatic;
    if (symbol == ':' || (symbol == 0 && both_aromatic)) bd.aromatic = true;
    m.bonds.push_back(bd);
  };

  size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    size_t here = pos;

    if (c == '(') {
      if (prev_atom < 0) throw SmilesError("branch before any atom", here);
      branch_stack.push_back(prev_atom);
      ++pos;
      continue;
    }
    if (c == ')') {
      if (branch_stack.empty()) throw SmilesError("unmatched ')'", here);
      if (pending.symbol != 0)
        throw SmilesError("dangling bond before ')'", pending.offset);
      prev_atom = branch_stack.back();
      branch_stack.pop_back();
      ++pos;
      continue;
    }
    if (c == '.') {
      if (pending.symbol != 0)
        throw SmilesError("bond before '.'", pending.offset);
      prev_atom = -1;
      after_dot = true;
      ++pos;
      continue;
    }
    if (c == '-' || c == '=' || c == '#' || c == ':' || c == '/' || c == '\\') {
      if (pending.symbol != 0)
        throw SmilesError("two bond symbols in a row", here);
      pending = {c, here};
      ++pos;
      continue;
    }
    if (std::isdigit(c) || c == '%') {
      if (prev_atom < 0) throw SmilesError("ring closure before any atom", here);
      int num;
      if (c == '%') {
        if (pos + 2 >= text.size() || !std::isdigit(text[pos + 1]) ||
            !std::isdigit(text[pos + 2]))
          throw SmilesError("malformed %nn ring closure", here);
        num = (text[pos + 1] - '0') * 10 + (text[pos + 2] - '0');
        pos += 3;
      } else {
        num = c - '0';
        ++pos;
      }
      auto it = ring_open.find(num);
      if (it == ring_open.end()) {
        ring_open[num] = {prev_atom, pending.symbol, here};
      } else {
        char sym = pending.symbol ? pending.symbol : it->second.bond_symbol;
        if (pending.symbol && it->second.bond_symbol &&
            pending.symbol != it->second.bond_symbol)
          throw SmilesError("ring closure bond mismatch", here);
        add_bond(it->second.atom, prev_atom, sym, here);
        ring_open.erase(it);
      }
      pending = {};
      continue;
    }

    // atom
    Atom atom;
    bool is_bracket = false;
    if (c == '[') {
      atom = parse_bracket_atom(text, pos);
      is_bracket = true;
    } else {
      int z;
      bool arom;
      if (!parse_element_token(text, pos, z, arom))
        throw SmilesError(std::string("unexpected character '") + c + "'", here);
      atom.atomic_num = z;
      atom.aromatic = arom;
    }

    int idx = m.num_atoms();
    m.atoms.push_back(atom);
    bracketed.push_back(is_bracket ? 1 : 0);
    atom_offsets.push_back(here);
    if (prev_atom >= 0) {
      add_bond(prev_atom, idx, pending.symbol, here);
    } else if (!after_dot && idx > 0 && pending.symbol != 0) {
      throw SmilesError("dangling bond", pending.offset);
    }
    pending = {};
    after_dot = false;
    prev_atom = idx;
  }

  if (!branch_stack.empty())
    throw SmilesError("unclosed branch", text.size() - 1);
  if (pending.symbol != 0)
    throw SmilesError("dangling bond at end", pending.offset);
  if (!ring_open.empty())
    throw SmilesError("unclosed ring closure", ring_open.begin()->second.offset);

  m.finalize();

  // Unspecified aromatic-aromatic bonds outside any ring are plain singles
  // (e.g. the biphenyl linker).
  for (auto& bd : m.bonds)
    if (bd.aromatic && !bd.in_ring) bd.aromatic = false;
  for (int ai = 0; ai < m.num_atoms(); ++ai)
    if (m.atoms[ai].aromatic && !m.atoms[ai].in_ring)
      throw SmilesError("aromatic atom outside a ring", atom_offsets[ai]);

  // Implicit hydrogens for plain organic-subset atoms.
  for (int ai = 0; ai < m.num_atoms(); ++ai) {
    if (bracketed[ai]) continue;
    int h = implicit_h_for(m, ai);
    if (h < 0)
      throw SmilesError("valence impossible to satisfy", atom_offsets[ai]);
    m.atoms[ai].implicit_h = h;
  }

  return m;
}

namespace {

// Would the parser reproduce this implicit H count from a plain symbol?
bool plain_symbol_ok(const Molecule& m, int ai) {
  const Atom& atom = m.atoms[ai];
  if (!elements::is_organic_subset(atom.atomic_num)) return false;
  if (atom.formal_charge != 0 || atom.isotope != 0) return false;
  if (atom.aromatic && !elements::can_be_aromatic(atom.atomic_num)) return false;
  return implicit_h_for(m, ai) == atom.implicit_h;
}

void write_atom(std::ostringstream& out, const Molecule& m, int ai) {
  const Atom& atom = m.atoms[ai];
  std::string sym = elements::symbol(atom.atomic_num);
  if (atom.aromatic) {
    for (auto& ch : sym) ch = static_cast<char>(std::tolower(ch));
  }
  if (plain_symbol_ok(m, ai)) {
    out << sym;
    return;
  }
  out << '[';
  if (atom.isotope > 0) out << atom.isotope;
  out << sym;
  if (atom.implicit_h == 1)
    out << 'H';
  else if (atom.implicit_h > 1)
    out << 'H' << atom.implicit_h;
  if (atom.formal_charge == 1)
    out << '+';
  else if (atom.formal_charge == -1)
    out << '-';
  else if (atom.formal_charge > 1)
    out << '+' << atom.formal_charge;
  else if (atom.formal_charge < -1)
    out << '-' << (-atom.formal_charge);
  out << ']';
}

struct Writer {
  const Molecule& m;
  const std::vector<int>& rank;  // rank[atom] = priority, lower first
  std::ostringstream out;
  std::vector<char> visited;
  std::vector<std::vector<int>> tree_children;   // atom -> child bond indices
  std::vector<std::vector<int>> closure_bonds;   // atom -> ring bond indices
  std::vector<int> closure_digit;                // bond -> digit (-1 if tree)

  explicit Writer(const Molecule& mol, const std::vector<int>& ranks)
      : m(mol), rank(ranks), visited(mol.num_atoms(), 0),
        tree_children(mol.num_atoms()), closure_bonds(mol.num_atoms()),
        closure_digit(mol.num_bonds(), -1) {}

  std::vector<int> sorted_neighbor_bonds(int ai, int parent_bond) const {
    std::vector<int> nbr;
    for (int bi : m.adj[ai])
      if (bi != parent_bond) nbr.push_back(bi);
    std::sort(nbr.begin(), nbr.end(), [&](int x, int y) {
      return rank[m.bonds[x].other(ai)] < rank[m.bonds[y].other(ai)];
    });
    return nbr;
  }

  // Pass 1: classify edges into spanning tree and ring closures, assigning
  // closure digits in discovery order. Both endpoints record the closure.
  void plan(int ai, int parent_bond, int& next_digit) {
    visited[ai] = 1;
    for (int bi : sorted_neighbor_bonds(ai, parent_bond)) {
      int nb = m.bonds[bi].other(ai);
      if (visited[nb]) {
        if (closure_digit[bi] >= 0) continue;  // seen from the other side
        closure_digit[bi] = next_digit++;
        closure_bonds[nb].push_back(bi);  // opening side (visited earlier)
        closure_bonds[ai].push_back(bi);  // closing side
      } else {
        tree_children[ai].push_back(bi);
        plan(nb, bi, next_digit);
      }
    }
  }

  void emit_bond_symbol(const Bond& bd) {
    if (bd.aromatic) return;  // default between lowercase atoms
    if (bd.order == 2)
      out << '=';
    else if (bd.order == 3)
      out << '#';
    else if (m.atoms[bd.a].aromatic && m.atoms[bd.b].aromatic)
      out << '-';  // single bond joining two aromatic systems
  }

  void emit(int ai) {
    write_atom(out, m, ai);
    for (int bi : closure_bonds[ai]) {
      emit_bond_symbol(m.bonds[bi]);
      int digit = closure_digit[bi];
      if (digit >= 10) out << '%';
      out << digit;
    }
    const auto& children = tree_children[ai];
    for (size_t i = 0; i < children.size(); ++i) {
      int bi = children[i];
      bool last = (i + 1 == children.size());
      if (!last) out << '(';
      emit_bond_symbol(m.bonds[bi]);
      emit(m.bonds[bi].other(ai));
      if (!last) out << ')';
    }
  }
};

}  // namespace

std::string write_smiles(const Molecule& m, const std::vector<int>& rank) {
  Writer writer(m, rank);
  // components, each started at its lowest-rank atom, components ordered
  // by that rank
  std::vector<std::vector<int>> comps = m.components();
  std::vector<int> starts;
  for (auto& comp : comps) {
    int best = comp[0];
    for (int a : comp)
      if (rank[a] < rank[best]) best = a;
    starts.push_back(best);
  }
  std::sort(starts.begin(), starts.end(),
            [&](int x, int y) { return rank[x] < rank[y]; });
  int next_digit = 1;
  for (int s : starts) writer.plan(s, -1, next_digit);
  bool first = true;
  for (int s : starts) {
    if (!first) writer.out << '.';
    first = false;
    writer.emit(s);
  }
  return writer.out.str();
}

std::string write_smiles(const Molecule& m) {
  std::vector<int> rank(m.num_atoms());
  for (int i = 0; i < m.num_atoms(); ++i) rank[i] = i;
  return write_smiles(m, rank);
}

}  // namespace molcurate
