#ifndef RMLMAP_RDF_HPP
#define RMLMAP_RDF_HPP

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace rmlmap::rdf {

enum class TermKind { Iri, BlankNode, Literal };

/// An RDF 1.1 term. For literals, `datatype` and `language` are mutually
/// exclusive; a literal with neither is a simple literal. Blank node labels
/// are stored without the "_:" prefix.
struct Term {
  TermKind kind = TermKind::Iri;
  std::string lexical;
  std::string datatype;
  std::string language;

  static Term iri(std::string value) {
    return Term{TermKind::Iri, std::move(value), {}, {}};
  }
  static Term blank(std::string label) {
    return Term{TermKind::BlankNode, std::move(label), {}, {}};
  }
  static Term literal(std::string value) {
    return Term{TermKind::Literal, std::move(value), {}, {}};
  }
  static Term typedLiteral(std::string value, std::string datatypeIri) {
    return Term{TermKind::Literal, std::move(value), std::move(datatypeIri), {}};
  }
  static Term langLiteral(std::string value, std::string tag) {
    return Term{TermKind::Literal, std::move(value), {}, std::move(tag)};
  }

  bool isIri() const { return kind == TermKind::Iri; }
  bool isBlank() const { return kind == TermKind::BlankNode; }
  bool isLiteral() const { return kind == TermKind::Literal; }
  bool isPlainLiteral() const {
    return isLiteral() && datatype.empty() && language.empty();
  }

  friend bool operator==(const Term&, const Term&) = default;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Checks the lexical form against the absolute-IRI shape: a scheme followed
/// by ':' and no characters that the N-Triples IRIREF production forbids.
bool isAbsoluteIri(const std::string& iri);

/// An insertion-ordered set of triples. Duplicate inserts are dropped, first
/// occurrence wins.
class TripleSet {
 public:
  bool insert(Triple triple);
  void merge(const TripleSet& other);

  const std::vector<Triple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  bool contains(const Triple& triple) const;

  friend bool operator==(const TripleSet& a, const TripleSet& b) {
    return a.triples_ == b.triples_;
  }

 private:
  std::vector<Triple> triples_;
  std::unordered_set<std::string> keys_;
};

/// Serializes a term the way it appears in an N-Triples line.
std::string toNTriplesTerm(const Term& term);

/// Canonical N-Triples: one triple per line, "\n" line ends, trailing
/// newline, UTF-8 kept raw except for the escapes the grammar requires.
std::string serializeNTriples(const TripleSet& triples);

/// RDF graph isomorphism: true iff some bijection over blank node labels
/// makes the two sets equal. Ground terms must match exactly.
bool isomorphic(const TripleSet& a, const TripleSet& b);

namespace iri {
inline const std::string kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline const std::string kXsdString = "http://www.w3.org/2001/XMLSchema#string";
inline const std::string kXsdInteger = "http://www.w3.org/2001/XMLSchema#integer";
inline const std::string kXsdDecimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline const std::string kXsdDouble = "http://www.w3.org/2001/XMLSchema#double";
inline const std::string kXsdBoolean = "http://www.w3.org/2001/XMLSchema#boolean";
}  // namespace iri

}  // namespace rmlmap::rdf

#endif
