#include "cmhopf/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cmhopf/cm_fdb.hpp"
#include "cmhopf/shuffle.hpp"

namespace cmhopf {

namespace {

  std::vector<TableRow> sorted_rows(std::map<Composition, Rational> const& coeffs) {
    std::vector<TableRow> rows;
    rows.reserve(coeffs.size());
    for (auto const& [c, v] : coeffs) {
      rows.push_back({c, v});
    }
    std::sort(rows.begin(), rows.end(), [](TableRow const& a, TableRow const& b) {
      return table_order_less(a.sequence, b.sequence);
    });
    return rows;
  }

}  // namespace

std::vector<TableRow> coproduct_table(int n, Family family) {
  return sorted_rows(family == Family::a ? ordered_coproduct_a(n) : ordered_coproduct_delta(n));
}

std::vector<TableRow> antipode_table(int n, Family family) {
  return sorted_rows(family == Family::a ? ordered_antipode_a(n) : ordered_antipode_delta(n));
}

std::string render_row(TableRow const& row) {
  return row.sequence.to_string() + " = " + to_display_string(row.value);
}

std::string render_rows(std::vector<TableRow> const& rows) {
  std::string s;
  for (auto const& row : rows) {
    s += render_row(row);
    s += '\n';
  }
  return s;
}

std::string reduced_coproduct_display(TensorElement const& x, int n, std::string_view symbol) {
  std::map<Monomial, AlgebraElement> groups;
  for (auto const& [k, c] : x.terms()) {
    if (k.first.is_unit() || k.second.is_unit()) {
      continue;
    }
    auto [it, inserted] = groups.try_emplace(k.second, x.family());
    it->second.add_term(k.first, c);
  }

  std::string s = "Δ̃" + std::string(symbol) + subscript(n) + " = ";
  if (groups.empty()) {
    return s + "0";
  }
  bool first = true;
  for (auto const& [right, left] : groups) {
    std::string const right_text = to_text(right, symbol);
    if (left.terms().size() == 1) {
      auto const& [m, c] = *left.terms().begin();
      bool const  negative = c < 0;
      if (first) {
        s += negative ? "−" : "";
      } else {
        s += negative ? " − " : " + ";
      }
      AlgebraElement const magnitude = AlgebraElement::monomial(x.family(), m, abs(c));
      s += to_text(magnitude, symbol) + " ⊗ " + right_text;
    } else {
      s += first ? "" : " + ";
      s += "(" + to_text(left, symbol) + ") ⊗ " + right_text;
    }
    first = false;
  }
  return s;
}

std::string reduced_coproduct_display(int n) {
  return reduced_coproduct_display(coproduct_delta(n, Family::gamma), n, "Γ");
}

std::string antipode_display(int n) {
  return "S(Γ" + subscript(n) + ") = " + to_text(antipode_delta(n, Family::gamma), "Γ");
}

std::string render_tables(int max_degree) {
  std::ostringstream out;
  out << "Coproduct\n";
  for (int n = 2; n <= max_degree; ++n) {
    out << render_rows(coproduct_table(n));
  }
  out << '\n';
  for (int n = 1; n <= max_degree; ++n) {
    out << reduced_coproduct_display(n) << '\n';
  }
  out << "\nAntipode\n";
  for (int n = 1; n <= max_degree; ++n) {
    out << render_rows(antipode_table(n));
  }
  out << '\n';
  for (int n = 1; n <= max_degree; ++n) {
    out << antipode_display(n) << '\n';
  }
  return out.str();
}

std::string coproduct_text(TensorElement const& x, int n) {
  return "Δ(" + generator_symbol(x.family()) + subscript(n) + ") = " + to_text(x);
}

std::string antipode_text(AlgebraElement const& x, int n) {
  return "S(" + generator_symbol(x.family()) + subscript(n) + ") = " + to_text(x);
}

std::string to_text(PowerSeries const& p) {
  std::string    s;
  bool           first = true;
  for (int i = 0; i <= p.order(); ++i) {
    Rational const& c = p[i];
    if (c == 0) {
      continue;
    }
    s += first ? (c < 0 ? "−" : "") : (c < 0 ? " − " : " + ");
    first = false;
    Rational const mag = abs(c);
    if (i == 0) {
      s += to_string(mag);
      continue;
    }
    if (mag != 1) {
      s += mag.get_den() == 1 ? to_string(mag) : "(" + to_string(mag) + ")";
    }
    s += "x";
    if (i > 1) {
      static constexpr std::string_view kSuperscripts[] = {"⁰", "¹", "²", "³", "⁴",
                                                           "⁵", "⁶", "⁷", "⁸", "⁹"};
      for (char ch : std::to_string(i)) {
        s += kSuperscripts[ch - '0'];
      }
    }
  }
  return first ? "0" : s;
}

std::string conjugacy_text(std::span<Rational const> u, int order, bool* residual_zero) {
  Diffeo const      phi      = conjugacy_phi(u, order);
  PowerSeries const residual = conjugacy_residual(u, phi);
  std::string       s;
  for (int n = 1; n <= order; ++n) {
    s += "φ" + subscript(n) + " = " + to_display_string(phi.phi(n)) + "\n";
  }
  s += "residual = " + to_text(residual) + "\n";
  if (residual_zero != nullptr) {
    *residual_zero = residual.is_zero();
  }
  return s;
}

}  // namespace cmhopf
