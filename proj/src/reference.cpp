#include "specmin/reference.hpp"

#include <cmath>
#include <map>

namespace specmin {

namespace {

int kernel_order(int k, int r) { return 3 * k * k - k - 1 - (k - 1) * r; }

ClosedForm radical(int k, int r, long p, long q, long s, long t, std::string text) {
  ClosedForm c;
  c.k = k;
  c.r = r;
  c.p = p;
  c.q = q;
  c.s = s;
  c.t = t;
  c.text = std::move(text);
  return c;
}

ClosedForm decimal(int k, int r, double rho2, std::string text) {
  ClosedForm c;
  c.k = k;
  c.r = r;
  c.decimal_only = rho2;
  c.text = std::move(text);
  return c;
}

const std::map<std::pair<int, int>, ClosedForm>& forms() {
  static const std::map<std::pair<int, int>, ClosedForm> table = [] {
    std::map<std::pair<int, int>, ClosedForm> m;
    auto put = [&](ClosedForm c) { m.emplace(std::make_pair(c.k, c.r), std::move(c)); };
    put(radical(1, 0, 0, 0, 0, 1, "0"));
    put(radical(2, 0, 5, 0, 0, 1, "5"));
    put(radical(2, 1, 7, 1, 5, 2, "(7+sqrt5)/2"));
    put(radical(3, 0, 7, 1, 3, 1, "7+sqrt3"));
    put(radical(3, 1, 8, 0, 0, 1, "8"));
    put(radical(3, 2, 6, 1, 2, 1, "6+sqrt2"));
    put(radical(4, 0, 12, 0, 0, 1, "12"));
    put(radical(4, 1, 19, 1, 13, 2, "(19+sqrt13)/2"));
    put(radical(4, 2, 19, 1, 5, 2, "(19+sqrt5)/2"));
    put(radical(4, 3, 15, 1, 21, 2, "(15+sqrt21)/2"));
    put(radical(5, 0, 13, 1, 5, 1, "13+sqrt5"));
    // Published as rho(T*) = sqrt((n-5)/5 + 2.4812) and sqrt((n-6)/5 + 2.6751).
    put(decimal(5, 1, 12 + 2.4812, "12+2.4812"));
    put(decimal(5, 2, 11 + 2.6751, "11+2.6751"));
    put(radical(5, 3, 10, 1, 8, 1, "10+sqrt8"));
    put(radical(5, 4, 12, 0, 0, 1, "12"));
    put(radical(6, 0, 17, 1, 2, 1, "17+sqrt2"));
    put(radical(6, 1, 33, 1, 5, 2, "(33+sqrt5)/2"));
    put(radical(6, 2, 15, 1, 3, 1, "15+sqrt3"));
    put(radical(6, 3, 25, 1, 45, 2, "(25+sqrt45)/2"));
    put(radical(6, 4, 15, 0, 0, 1, "15"));
    put(radical(6, 5, 23, 1, 29, 2, "(23+sqrt29)/2"));
    return m;
  }();
  return table;
}

}  // namespace

double ClosedForm::kernel_rho2() const {
  if (decimal_only) return *decimal_only;
  return (static_cast<double>(p) + static_cast<double>(q) * std::sqrt(static_cast<double>(s))) / static_cast<double>(t);
}

double ClosedForm::rho2_at(int n) const {
  return kernel_rho2() + static_cast<double>(n - kernel_order(k, r)) / static_cast<double>(k);
}

std::optional<ClosedForm> closed_form(int k, int r) {
  auto it = forms().find({k, r});
  if (it == forms().end()) return std::nullopt;
  return it->second;
}

std::vector<ReferenceKernel> reference_kernels(int k, int r) {
  static const std::map<std::pair<int, int>, std::vector<ReferenceKernel>> table = {
      {{1, 0}, {{1, {0}}}},
      {{2, 0}, {{1, {3, 3}}}},
      {{2, 1}, {{1, {2, 3}}}},
      {{3, 0}, {{1, {7, 4, 7}}}},
      {{3, 1}, {{1, {6, 4, 6}}}},
      {{3, 2}, {{1, {5, 4, 5}}}},
      {{4, 0}, {{1, {10, 6, 10, 10}}, {2, {10, 8, 8, 10}}}},
      {{4, 1}, {{1, {9, 6, 9, 9}}}},
      {{4, 2}, {{2, {8, 7, 7, 8}}, {2, {9, 6, 7, 8}}, {2, {9, 6, 6, 9}}}},
      {{4, 3}, {{1, {8, 3, 8, 8}}}},
      {{5, 0}, {{1, {13, 8, 13, 13, 13}}}},
      {{5, 1}, {{3, {12, 11, 10, 11, 12}}}},
      {{5, 2}, {{3, {12, 9, 10, 9, 12}}}},
      {{5, 3}, {{1, {11, 4, 11, 11, 11}}}},
      {{5, 4}, {{1, {10, 4, 10, 10, 10}}, {2, {10, 6, 8, 10, 10}}, {3, {10, 8, 8, 8, 10}}}},
      {{6, 0}, {{3, {16, 13, 13, 16, 16, 16}}, {4, {16, 13, 14, 15, 16, 16}}, {6, {16, 15, 14, 14, 15, 16}}}},
      {{6, 1},
       {{5, {15, 14, 11, 13, 16, 16}},
        {5, {15, 14, 11, 14, 15, 16}},
        {5, {16, 13, 11, 13, 16, 16}},
        {5, {15, 14, 12, 13, 16, 15}},
        {5, {15, 14, 12, 14, 15, 15}},
        {5, {16, 13, 12, 13, 16, 15}},
        {6, {15, 14, 13, 14, 14, 15}},
        {6, {15, 14, 13, 14, 13, 16}},
        {6, {15, 14, 14, 13, 13, 16}},
        {6, {16, 13, 13, 14, 13, 16}}}},
      {{6, 2}, {{3, {15, 10, 10, 15, 15, 15}}, {4, {15, 10, 13, 12, 15, 15}}, {6, {15, 12, 13, 13, 12, 15}}}},
      {{6, 3}, {{1, {14, 5, 14, 14, 14, 14}}}},
      {{6, 4},
       {{1, {13, 5, 13, 13, 13, 13}},
        {2, {13, 7, 11, 13, 13, 13}},
        {3, {13, 9, 9, 13, 13, 13}},
        {4, {13, 9, 11, 11, 13, 13}},
        {5, {13, 11, 9, 11, 13, 13}},
        {6, {13, 11, 11, 11, 11, 13}}}},
      {{6, 5}, {{1, {12, 5, 12, 12, 12, 12}}}},
  };
  auto it = table.find({k, r});
  return it == table.end() ? std::vector<ReferenceKernel>{} : it->second;
}

std::vector<long> reference_counts(int k, int r) {
  static const std::map<std::pair<int, int>, std::vector<long>> table = {
      {{5, 0}, {38, 200, 170}},
      {{5, 1}, {27, 130, 110}},
      {{5, 2}, {18, 80, 66}},
      {{5, 3}, {12, 46, 38}},
      {{5, 4}, {7, 24, 19}},
      {{6, 0}, {60, 165, 243, 791, 495, 651}},
      {{6, 1}, {42, 120, 154, 496, 330, 396}},
      {{6, 2}, {29, 84, 95, 296, 210, 236}},
      {{6, 3}, {19, 56, 54, 166, 126, 126}},
      {{6, 4}, {12, 35, 30, 86, 70, 66}},
      {{6, 5}, {83, 220, 364, 1211, 715, 1001}},
  };
  auto it = table.find({k, r});
  return it == table.end() ? std::vector<long>{} : it->second;
}

}  // namespace specmin
