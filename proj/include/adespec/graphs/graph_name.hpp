#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace adespec::graphs {

enum class GraphTag {
  A,      // A(n): path on n vertices, distinguished at an end
  D,      // D(n): n vertices, distinguished at the end of the long tail
  E6,
  E7,
  E8,
  A1ext,  // A1ext(2n): the 2n-cycle
  D1ext,  // D1ext(n): extended D_n, n + 1 vertices, distinguished at a fork end
  E6ext,
  E7ext,
  E8ext,
  F,      // F(a,b,c): triple point with arms a, b, c; distinguished ends arm c
  AInf,
  DInf,
  AZZ,    // A_{-inf,inf}
};

/// Name of a graph in the catalog. Parameters are interpreted per tag:
/// A, D, A1ext, D1ext use `a`; F uses a, b, c; the rest use none.
struct GraphName {
  GraphTag tag = GraphTag::A;
  long a = 0;
  long b = 0;
  long c = 0;

  static GraphName A(long n) { return {GraphTag::A, n}; }
  static GraphName D(long n) { return {GraphTag::D, n}; }
  static GraphName E6() { return {GraphTag::E6}; }
  static GraphName E7() { return {GraphTag::E7}; }
  static GraphName E8() { return {GraphTag::E8}; }
  static GraphName A1ext(long vertices) { return {GraphTag::A1ext, vertices}; }
  static GraphName D1ext(long n) { return {GraphTag::D1ext, n}; }
  static GraphName E6ext() { return {GraphTag::E6ext}; }
  static GraphName E7ext() { return {GraphTag::E7ext}; }
  static GraphName E8ext() { return {GraphTag::E8ext}; }
  static GraphName F(long a, long b, long c) { return {GraphTag::F, a, b, c}; }
  static GraphName AInf() { return {GraphTag::AInf}; }
  static GraphName DInf() { return {GraphTag::DInf}; }
  static GraphName AZZ() { return {GraphTag::AZZ}; }

  bool is_symbolic() const {
    return tag == GraphTag::AInf || tag == GraphTag::DInf || tag == GraphTag::AZZ;
  }

  /// Canonical text: "A(4)", "A1ext(6)", "F(2,1,2)", "E7ext", "AInf".
  std::string str() const;

  /// Case-insensitive, whitespace-free grammar matching str(). Throws
  /// Error(parse) on malformed input and Error(range) on bad parameters.
  static GraphName parse(std::string_view text);

  /// Throws Error(range) when parameters are outside the tag's domain.
  void validate() const;

  /// F(a,b,c) with a known name is mapped to it (arms a and b commute);
  /// other names are returned unchanged.
  GraphName canonical() const;

  auto operator<=>(const GraphName&) const = default;
};

}  // namespace adespec::graphs
