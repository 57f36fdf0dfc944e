#pragma once

// Displayed closed forms for the gamma-word sweep in types A_n and B_n,
// written out term by term and compared against step_components.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qcyc/root_system.hpp"
#include "qcyc/spectral.hpp"

namespace closed_forms {

using qcyc::Node;
using qcyc::SpectralComponent;
using qcyc::SpectralSource;
using qcyc::WeylWord;

inline void term(SpectralComponent& c, Node r, std::int64_t shift, std::int64_t mult = 1) {
  auto& m = c[{SpectralSource::formal(r), shift}];
  m += mult;
  if (m == 0) c.erase({SpectralSource::formal(r), shift});
}

// gamma_i = s_1 ... s_i (A) or s_i ... s_1 ... s_i (B), w0 = gamma_n ... gamma_1.
inline std::vector<Node> gamma(qcyc::Family f, int i) {
  std::vector<Node> g;
  if (f == qcyc::Family::A) {
    for (int a = 1; a <= i; ++a) g.push_back(a);
  } else {
    for (int a = i; a >= 1; --a) g.push_back(a);
    for (int a = 2; a <= i; ++a) g.push_back(a);
  }
  return g;
}

inline WeylWord gamma_word(qcyc::Family f, int upto) {
  WeylWord w;
  for (int i = upto; i >= 1; --i) {
    const auto g = gamma(f, i);
    w.letters.insert(w.letters.end(), g.begin(), g.end());
  }
  return w;
}

struct Expected {
  int position;
  Node node;
  SpectralComponent content;
  std::string label;
};

// Expected step components along gamma_n ... gamma_1, by 1-based position.
inline std::vector<Expected> expected_steps(qcyc::Family f, int n) {
  std::vector<Expected> out;
  std::vector<int> start(static_cast<std::size_t>(n + 2), 1);
  for (int i = n - 1; i >= 1; --i) start[i] = start[i + 1] + static_cast<int>(gamma(f, i + 1).size());
  for (int i = 1; i <= n; ++i) {
    const auto g = gamma(f, i);
    for (std::size_t k = 0; k < g.size(); ++k) {
      const Node j = g[k];
      SpectralComponent c;
      std::ostringstream label;
      if (f == qcyc::Family::A) {
        for (int r = i - j + 1; r <= i; ++r) term(c, r, 2 * i - j - r);
        label << "A" << n << " i=" << i << " j=" << j;
      } else if (k + 1 < static_cast<std::size_t>(i)) {
        // left half s_i ... s_2: (T_{j-1} ... T_2 T_1 ... T_i T_{w_{i-1}} h)_j
        for (int r = j; r <= i; ++r) term(c, r, 4 * i + 2 * j - 6 - 2 * r);
        label << "B" << n << " i=" << i << " j=" << j << " (outer)";
      } else if (j == 1) {
        term(c, 1, 4 * i - 4);
        for (int r = 2; r <= i; ++r) {
          term(c, r, 4 * i - 1 - 2 * r);
          term(c, r, 4 * i - 3 - 2 * r);
        }
        label << "B" << n << " i=" << i << " j=1";
      } else {
        // right half s_2 ... s_i: (T_{j+1} ... T_i T_{w_{i-1}} h)_j
        term(c, 1, 4 * i - 2 * j - 3);
        for (int r = 2; r <= i; ++r) term(c, r, 4 * i - 2 * j - 2 * r);
        for (int r = 2; r <= j - 1; ++r) term(c, r, 4 * i - 2 * j - 6 + 2 * r);
        label << "B" << n << " i=" << i << " j=" << j << " (inner)";
      }
      out.push_back({start[i] + static_cast<int>(k), j, c, label.str()});
    }
  }
  return out;
}

inline std::string show(const SpectralComponent& c) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [s, m] : c) {
    os << (first ? "" : ", ") << m << "*h_" << s.source.id << "(q^" << s.shift << ")";
    first = false;
  }
  os << "}";
  return os.str();
}

// Positions where the sweep disagrees with the displayed formula.
inline std::vector<std::string> step_discrepancies(qcyc::Family f, int n,
                                                   qcyc::BraidRule rule = qcyc::BraidRule::Symmetrized) {
  const qcyc::CartanData cd = qcyc::cartan_data(qcyc::LieType(f, n));
  const WeylWord w = gamma_word(f, n);
  const auto steps = qcyc::step_components(cd, w, qcyc::SpectralVector::formal(n), rule);
  std::vector<std::string> out;
  for (const Expected& e : expected_steps(f, n)) {
    const auto& s = steps.at(static_cast<std::size_t>(e.position - 1));
    if (s.node != e.node || s.content != e.content) {
      out.push_back(e.label + ": computed " + show(s.content) + ", displayed " + show(e.content));
    }
  }
  return out;
}

// T_{gamma_i ... gamma_1} h as displayed; for B the j = i+1 component is
// built with the printed exponent 4i + 2r - 4 in its last sum, or 2i + 2r - 4.
inline std::vector<SpectralComponent> displayed_prefix(qcyc::Family f, int n, int i,
                                                       bool printed_b_tail = true) {
  std::vector<SpectralComponent> c(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    auto& x = c[static_cast<std::size_t>(j - 1)];
    if (f == qcyc::Family::A) {
      if (j <= i) {
        term(x, i + 1 - j, i + 1, -1);
      } else if (j == i + 1) {
        for (int r = 1; r <= i + 1; ++r) term(x, r, i + 1 - r);
      } else {
        term(x, j, 0);
      }
    } else {
      if (j <= i) {
        term(x, j, 4 * i - 2, -1);
      } else if (j == i + 1) {
        term(x, 1, 2 * i - 1);
        for (int r = 2; r <= i + 1; ++r) term(x, r, 2 * i - 2 * r + 2);
        for (int r = 2; r <= j - 1; ++r) term(x, r, printed_b_tail ? 4 * i + 2 * r - 4 : 2 * i + 2 * r - 4);
      } else {
        term(x, j, 0);
      }
    }
  }
  return c;
}

inline std::vector<std::string> prefix_discrepancies(qcyc::Family f, int n, bool printed_b_tail = true) {
  const qcyc::CartanData cd = qcyc::cartan_data(qcyc::LieType(f, n));
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) {
    const auto v = qcyc::braid_word(cd, gamma_word(f, i), qcyc::SpectralVector::formal(n));
    const auto want = displayed_prefix(f, n, i, printed_b_tail);
    for (int j = 1; j <= n; ++j) {
      if (v.component(j) != want[static_cast<std::size_t>(j - 1)]) {
        std::ostringstream os;
        os << (f == qcyc::Family::A ? "A" : "B") << n << " T_{w} i=" << i << " component " << j
           << ": computed " << show(v.component(j)) << ", displayed "
           << show(want[static_cast<std::size_t>(j - 1)]);
        out.push_back(os.str());
      }
    }
  }
  return out;
}

}  // namespace closed_forms
