#include "confalg/derive.hpp"

#include <array>

#include "confalg/error.hpp"
#include "confalg/table.hpp"

namespace confalg {

namespace {

void require(const Structure& s, std::initializer_list<Kind> kinds, std::string_view what) {
  for (Kind k : kinds) {
    if (s.kind == k) return;
  }
  throw InputError(std::string(what) + " is not defined for " + std::string(to_string(s.kind)) +
                   " structures");
}

Structure single(const FreeModule& m, Kind kind, const std::string& name, ProductTable t) {
  return Structure(m, kind, {{name, std::move(t)}});
}

Structure pair(const FreeModule& m, Kind kind, const std::string& a, ProductTable ta,
               const std::string& b, ProductTable tb) {
  return Structure(m, kind, {{a, std::move(ta)}, {b, std::move(tb)}});
}

}  // namespace

Structure commutator_lie(const Structure& s) {
  require(s, {Kind::left_symmetric, Kind::associative, Kind::l_dendriform}, "commutator");
  if (s.kind == Kind::l_dendriform) return commutator_lie(horizontal(s));
  const auto& c = s.op("circ");
  return single(s.module, Kind::lie, "bracket", c - opposite(c));
}

Structure horizontal(const Structure& ld) {
  require(ld, {Kind::l_dendriform}, "horizontal product");
  return single(ld.module, Kind::left_symmetric, "circ", ld.op("tri_r") + ld.op("tri_l"));
}

Structure vertical(const Structure& ld) {
  require(ld, {Kind::l_dendriform}, "vertical product");
  return single(ld.module, Kind::left_symmetric, "circ",
                ld.op("tri_r") - opposite(ld.op("tri_l")));
}

Structure transpose_l_dendriform(const Structure& ld) {
  require(ld, {Kind::l_dendriform}, "transpose");
  return pair(ld.module, Kind::l_dendriform, "tri_r", ld.op("tri_r"), "tri_l",
              -opposite(ld.op("tri_l")));
}

Structure dendriform_as_l_dendriform(const Structure& dend) {
  require(dend, {Kind::dendriform}, "dendriform embedding");
  return pair(dend.module, Kind::l_dendriform, "tri_r", dend.op("succ"), "tri_l", dend.op("prec"));
}

Structure dendriform_sum(const Structure& dend) {
  require(dend, {Kind::dendriform}, "dendriform sum");
  return single(dend.module, Kind::associative, "circ", dend.op("succ") + dend.op("prec"));
}

Structure quadri_succ_prec(const Structure& q) {
  require(q, {Kind::quadri}, "quadri (succ, prec)");
  return pair(q.module, Kind::dendriform, "succ", q.op("ne") + q.op("se"), "prec",
              q.op("nw") + q.op("sw"));
}

Structure quadri_vee_wedge(const Structure& q) {
  require(q, {Kind::quadri}, "quadri (vee, wedge)");
  return pair(q.module, Kind::dendriform, "succ", q.op("sw") + q.op("se"), "prec",
              q.op("nw") + q.op("ne"));
}

Structure quadri_star(const Structure& q) {
  require(q, {Kind::quadri}, "quadri star");
  return single(q.module, Kind::associative, "circ",
                q.op("nw") + q.op("sw") + q.op("ne") + q.op("se"));
}

Structure quadri_l_dendriform(const Structure& q) {
  require(q, {Kind::quadri}, "quadri to l-dendriform");
  return pair(q.module, Kind::l_dendriform, "tri_r", q.op("se") - opposite(q.op("nw")), "tri_l",
              q.op("ne") - opposite(q.op("sw")));
}

namespace {

struct ConversionName {
  Conversion c;
  std::string_view name;
};

constexpr std::array<ConversionName, 10> kConversions{{
    {Conversion::commutator, "commutator"},
    {Conversion::horizontal, "horizontal"},
    {Conversion::vertical, "vertical"},
    {Conversion::transpose, "transpose"},
    {Conversion::dendriform_ld, "dendriform-ld"},
    {Conversion::dendriform_sum, "dendriform-sum"},
    {Conversion::quadri_succ_prec, "quadri-succ-prec"},
    {Conversion::quadri_vee_wedge, "quadri-vee-wedge"},
    {Conversion::quadri_star, "quadri-star"},
    {Conversion::quadri_ld, "quadri-ld"},
}};

}  // namespace

Conversion parse_conversion(std::string_view name) {
  for (const auto& c : kConversions) {
    if (c.name == name) return c.c;
  }
  throw InputError("unknown conversion '" + std::string(name) + "'");
}

std::string_view to_string(Conversion c) {
  for (const auto& x : kConversions) {
    if (x.c == c) return x.name;
  }
  return "?";
}

Structure derive_structure(const Structure& s, Conversion which) {
  switch (which) {
    case Conversion::commutator:
      return commutator_lie(s);
    case Conversion::horizontal:
      return horizontal(s);
    case Conversion::vertical:
      return vertical(s);
    case Conversion::transpose:
      return transpose_l_dendriform(s);
    case Conversion::dendriform_ld:
      return dendriform_as_l_dendriform(s);
    case Conversion::dendriform_sum:
      return dendriform_sum(s);
    case Conversion::quadri_succ_prec:
      return quadri_succ_prec(s);
    case Conversion::quadri_vee_wedge:
      return quadri_vee_wedge(s);
    case Conversion::quadri_star:
      return quadri_star(s);
    case Conversion::quadri_ld:
      return quadri_l_dendriform(s);
  }
  throw InputError("unknown conversion");
}

}  // namespace confalg
