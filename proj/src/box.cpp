#include "ngg/box.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ngg {

namespace {

void check_labels(const std::vector<int>& labels, const char* which) {
  if (labels.empty()) throw std::invalid_argument(std::string(which) + ": empty label set");
  std::vector<int> s = labels;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument(std::string(which) + ": duplicate label");
}

int find_label(const std::vector<int>& labels, int label, const char* which) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end())
    throw std::out_of_range(std::string(which) + ": unknown label " + std::to_string(label));
  return static_cast<int>(it - labels.begin());
}

}  // namespace

NonlocalBox::NonlocalBox(std::vector<int> ia, std::vector<int> ib, std::vector<int> oa,
                         std::vector<int> ob)
    : in_a(std::move(ia)), in_b(std::move(ib)), out_a(std::move(oa)), out_b(std::move(ob)) {
  check_labels(in_a, "in_a");
  check_labels(in_b, "in_b");
  check_labels(out_a, "out_a");
  check_labels(out_b, "out_b");
  table.assign(in_a.size() * in_b.size() * out_a.size() * out_b.size(), Rat(0));
}

Rat& NonlocalBox::at(int ix, int iy, int ia, int ib) {
  std::size_t idx = ((static_cast<std::size_t>(ix) * in_b.size() + iy) * out_a.size() + ia) *
                        out_b.size() +
                    ib;
  return table[idx];
}

const Rat& NonlocalBox::at(int ix, int iy, int ia, int ib) const {
  return const_cast<NonlocalBox*>(this)->at(ix, iy, ia, ib);
}

int NonlocalBox::index_in_a(int label) const { return find_label(in_a, label, "in_a"); }
int NonlocalBox::index_in_b(int label) const { return find_label(in_b, label, "in_b"); }
int NonlocalBox::index_out_a(int label) const { return find_label(out_a, label, "out_a"); }
int NonlocalBox::index_out_b(int label) const { return find_label(out_b, label, "out_b"); }

const Rat& NonlocalBox::p(int x, int y, int a, int b) const {
  return at(index_in_a(x), index_in_b(y), index_out_a(a), index_out_b(b));
}

Rat& NonlocalBox::p(int x, int y, int a, int b) {
  return at(index_in_a(x), index_in_b(y), index_out_a(a), index_out_b(b));
}

namespace {

NonlocalBox binary_box() {
  return NonlocalBox({0, 1}, {0, 1}, {0, 1}, {0, 1});
}

}  // namespace

NonlocalBox box_p0() {
  NonlocalBox b = binary_box();
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) b.at(x, y, 0, 0) = 1;
  return b;
}

NonlocalBox box_p1() {
  NonlocalBox b = binary_box();
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) b.at(x, y, 1, 1) = 1;
  return b;
}

NonlocalBox box_sr() {
  NonlocalBox b = binary_box();
  Rat half = rat(1, 2);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      b.at(x, y, 0, 0) = half;
      b.at(x, y, 1, 1) = half;
    }
  return b;
}

NonlocalBox box_pr() {
  NonlocalBox b = binary_box();
  Rat half = rat(1, 2);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int bb = 0; bb < 2; ++bb)
          if ((a ^ bb) == (x & y)) b.at(x, y, a, bb) = half;
  return b;
}

NonlocalBox box_pr_alpha_beta(const Rat& alpha, const Rat& beta) {
  if (alpha < 0 || beta < 0 || alpha + beta > 1)
    throw std::invalid_argument("PR_ab needs alpha, beta >= 0 with alpha + beta <= 1");
  NonlocalBox pr = box_pr(), p0 = box_p0(), p1 = box_p1();
  return mix_boxes({{alpha, &pr}, {beta, &p0}, {1 - alpha - beta, &p1}});
}

NonlocalBox canonical_box(const std::string& name, const Rat& alpha, const Rat& beta) {
  if (name == "P0") return box_p0();
  if (name == "P1") return box_p1();
  if (name == "SR") return box_sr();
  if (name == "PR") return box_pr();
  if (name == "PR_ab") return box_pr_alpha_beta(alpha, beta);
  throw std::invalid_argument("unknown box name: " + name);
}

NonlocalBox mix_boxes(const std::vector<std::pair<Rat, const NonlocalBox*>>& terms) {
  if (terms.empty()) throw std::invalid_argument("empty mixture");
  Rat total = 0;
  for (const auto& [w, box] : terms) {
    if (w < 0) throw std::invalid_argument("negative mixture weight");
    if (!(box->in_a == terms[0].second->in_a && box->in_b == terms[0].second->in_b &&
          box->out_a == terms[0].second->out_a && box->out_b == terms[0].second->out_b))
      throw std::invalid_argument("mixture of boxes with different signatures");
    total += w;
  }
  if (total != 1) throw std::invalid_argument("mixture weights must sum to 1");
  NonlocalBox out(terms[0].second->in_a, terms[0].second->in_b, terms[0].second->out_a,
                  terms[0].second->out_b);
  for (std::size_t i = 0; i < out.table.size(); ++i)
    for (const auto& [w, box] : terms) out.table[i] += w * box->table[i];
  return out;
}

BoxReport verify_box(const NonlocalBox& b) {
  BoxReport r;
  int nx = static_cast<int>(b.in_a.size()), ny = static_cast<int>(b.in_b.size());
  int na = static_cast<int>(b.out_a.size()), nb = static_cast<int>(b.out_b.size());
  auto note = [&](bool& flag, const std::string& msg) {
    if (r.first_violation.empty()) r.first_violation = msg;
    flag = false;
  };
  std::ostringstream os;

  for (int x = 0; x < nx && r.nonnegative; ++x)
    for (int y = 0; y < ny && r.nonnegative; ++y)
      for (int a = 0; a < na && r.nonnegative; ++a)
        for (int bb = 0; bb < nb && r.nonnegative; ++bb)
          if (b.at(x, y, a, bb) < 0) {
            os << "negative entry at x=" << b.in_a[x] << " y=" << b.in_b[y]
               << " a=" << b.out_a[a] << " b=" << b.out_b[bb];
            note(r.nonnegative, os.str());
          }

  for (int x = 0; x < nx && r.normalized; ++x)
    for (int y = 0; y < ny && r.normalized; ++y) {
      Rat s = 0;
      for (int a = 0; a < na; ++a)
        for (int bb = 0; bb < nb; ++bb) s += b.at(x, y, a, bb);
      if (s != 1) {
        os.str("");
        os << "outputs sum to " << rat_to_string(s) << " at x=" << b.in_a[x]
           << " y=" << b.in_b[y];
        note(r.normalized, os.str());
      }
    }

  // Alice's marginal must not depend on y.
  for (int x = 0; x < nx && r.ns_alice; ++x)
    for (int a = 0; a < na && r.ns_alice; ++a) {
      Rat first = 0;
      for (int y = 0; y < ny; ++y) {
        Rat m = 0;
        for (int bb = 0; bb < nb; ++bb) m += b.at(x, y, a, bb);
        if (y == 0) {
          first = m;
        } else if (m != first) {
          os.str("");
          os << "Alice marginal at x=" << b.in_a[x] << " a=" << b.out_a[a]
             << " differs between y=" << b.in_b[0] << " and y=" << b.in_b[y];
          note(r.ns_alice, os.str());
        }
      }
    }

  for (int y = 0; y < ny && r.ns_bob; ++y)
    for (int bb = 0; bb < nb && r.ns_bob; ++bb) {
      Rat first = 0;
      for (int x = 0; x < nx; ++x) {
        Rat m = 0;
        for (int a = 0; a < na; ++a) m += b.at(x, y, a, bb);
        if (x == 0) {
          first = m;
        } else if (m != first) {
          os.str("");
          os << "Bob marginal at y=" << b.in_b[y] << " b=" << b.out_b[bb]
             << " differs between x=" << b.in_a[0] << " and x=" << b.in_a[x];
          note(r.ns_bob, os.str());
        }
      }
    }

  return r;
}

}  // namespace ngg
