#include "rmlmap/rdf.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rmlmap::rdf {

namespace {

std::string termKey(const Term& t) {
  std::string key;
  key.reserve(t.lexical.size() + t.datatype.size() + t.language.size() + 4);
  switch (t.kind) {
    case TermKind::Iri: key += 'I'; break;
    case TermKind::BlankNode: key += 'B'; break;
    case TermKind::Literal: key += 'L'; break;
  }
  key += t.lexical;
  key += '\x01';
  key += t.datatype;
  key += '\x01';
  key += t.language;
  return key;
}

std::string tripleKey(const Triple& t) {
  return termKey(t.subject) + '\x02' + termKey(t.predicate) + '\x02' +
         termKey(t.object);
}

void escapeLiteralInto(const std::string& value, std::string& out) {
  static const char* hex = "0123456789ABCDEF";
  for (unsigned char c : value) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          out += "\\u00";
          out += hex[(c >> 4) & 0xF];
          out += hex[c & 0xF];
        } else {
          out += static_cast<char>(c);
        }
    }
  }
}

}  // namespace

bool isAbsoluteIri(const std::string& iri) {
  std::size_t colon = std::string::npos;
  for (std::size_t i = 0; i < iri.size(); ++i) {
    char c = iri[i];
    if (c == ':') {
      colon = i;
      break;
    }
    bool schemeChar = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                      (i > 0 && ((c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.'));
    if (!schemeChar) return false;
  }
  if (colon == std::string::npos || colon == 0) return false;
  for (unsigned char c : iri) {
    if (c <= 0x20) return false;
    if (c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' ||
        c == '^' || c == '`' || c == '\\') {
      return false;
    }
  }
  return true;
}

bool TripleSet::insert(Triple triple) {
  auto [it, inserted] = keys_.insert(tripleKey(triple));
  if (inserted) triples_.push_back(std::move(triple));
  return inserted;
}

void TripleSet::merge(const TripleSet& other) {
  for (const Triple& t : other.triples()) insert(t);
}

bool TripleSet::contains(const Triple& triple) const {
  return keys_.count(tripleKey(triple)) > 0;
}

std::string toNTriplesTerm(const Term& term) {
  std::string out;
  switch (term.kind) {
    case TermKind::Iri:
      out += '<';
      out += term.lexical;
      out += '>';
      break;
    case TermKind::BlankNode:
      out += "_:";
      out += term.lexical;
      break;
    case TermKind::Literal:
      out += '"';
      escapeLiteralInto(term.lexical, out);
      out += '"';
      if (!term.language.empty()) {
        out += '@';
        out += term.language;
      } else if (!term.datatype.empty() && term.datatype != iri::kXsdString) {
        out += "^^<";
        out += term.datatype;
        out += '>';
      }
      break;
  }
  return out;
}

std::string serializeNTriples(const TripleSet& triples) {
  std::string out;
  for (const Triple& t : triples.triples()) {
    out += toNTriplesTerm(t.subject);
    out += ' ';
    out += toNTriplesTerm(t.predicate);
    out += ' ';
    out += toNTriplesTerm(t.object);
    out += " .\n";
  }
  return out;
}

namespace {

// Isomorphism search state: triples are compared after substituting a
// candidate blank-label bijection. Graphs in this codebase are small
// (conformance fixtures), so backtracking with signature pruning is enough.
struct IsoGraph {
  std::vector<Triple> triples;
  std::vector<std::string> blanks;

  explicit IsoGraph(const TripleSet& set) {
    triples = set.triples();
    std::unordered_set<std::string> seen;
    for (const Triple& t : triples) {
      for (const Term* term : {&t.subject, &t.object}) {
        if (term->isBlank() && seen.insert(term->lexical).second) {
          blanks.push_back(term->lexical);
        }
      }
    }
  }
};

std::string groundTermSig(const Term& t) {
  if (t.isBlank()) return "?";
  return termKey(t);
}

// Per-blank signature: the multiset of (predicate, other endpoint, direction)
// facts the node participates in, with blanks collapsed to "?".
std::map<std::string, std::multiset<std::string>> blankSignatures(const IsoGraph& g) {
  std::map<std::string, std::multiset<std::string>> sig;
  for (const std::string& b : g.blanks) sig[b];
  for (const Triple& t : g.triples) {
    if (t.subject.isBlank()) {
      sig[t.subject.lexical].insert("S|" + termKey(t.predicate) + "|" +
                                    groundTermSig(t.object));
    }
    if (t.object.isBlank()) {
      sig[t.object.lexical].insert("O|" + termKey(t.predicate) + "|" +
                                   groundTermSig(t.subject));
    }
  }
  return sig;
}

Term substitute(const Term& t,
                const std::unordered_map<std::string, std::string>& mapping) {
  if (!t.isBlank()) return t;
  auto it = mapping.find(t.lexical);
  return Term::blank(it == mapping.end() ? t.lexical : it->second);
}

bool equalUnderMapping(const IsoGraph& a, const IsoGraph& b,
                       const std::unordered_map<std::string, std::string>& mapping) {
  std::multiset<std::string> left, right;
  for (const Triple& t : a.triples) {
    Triple mapped{substitute(t.subject, mapping), t.predicate,
                  substitute(t.object, mapping)};
    left.insert(tripleKey(mapped));
  }
  for (const Triple& t : b.triples) right.insert(tripleKey(t));
  return left == right;
}

bool searchBijection(const IsoGraph& a, const IsoGraph& b, std::size_t index,
                     const std::vector<std::vector<std::string>>& candidates,
                     std::unordered_map<std::string, std::string>& mapping,
                     std::unordered_set<std::string>& used) {
  if (index == a.blanks.size()) return equalUnderMapping(a, b, mapping);
  const std::string& blank = a.blanks[index];
  for (const std::string& target : candidates[index]) {
    if (used.count(target)) continue;
    mapping[blank] = target;
    used.insert(target);
    if (searchBijection(a, b, index + 1, candidates, mapping, used)) return true;
    mapping.erase(blank);
    used.erase(target);
  }
  return false;
}

}  // namespace

bool isomorphic(const TripleSet& a, const TripleSet& b) {
  if (a.size() != b.size()) return false;

  IsoGraph ga(a), gb(b);
  if (ga.blanks.size() != gb.blanks.size()) return false;

  // Ground triples must match exactly.
  std::multiset<std::string> groundA, groundB;
  for (const Triple& t : ga.triples) {
    if (!t.subject.isBlank() && !t.object.isBlank()) groundA.insert(tripleKey(t));
  }
  for (const Triple& t : gb.triples) {
    if (!t.subject.isBlank() && !t.object.isBlank()) groundB.insert(tripleKey(t));
  }
  if (groundA != groundB) return false;
  if (ga.blanks.empty()) return true;

  auto sigA = blankSignatures(ga);
  auto sigB = blankSignatures(gb);

  std::vector<std::vector<std::string>> candidates(ga.blanks.size());
  for (std::size_t i = 0; i < ga.blanks.size(); ++i) {
    const auto& want = sigA.at(ga.blanks[i]);
    for (const std::string& other : gb.blanks) {
      if (sigB.at(other) == want) candidates[i].push_back(other);
    }
    if (candidates[i].empty()) return false;
  }

  std::unordered_map<std::string, std::string> mapping;
  std::unordered_set<std::string> used;
  return searchBijection(ga, gb, 0, candidates, mapping, used);
}

}  // namespace rmlmap::rdf
