#include "spinent/coupling.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <ostream>

namespace spinent {

namespace {

// Raising weight (f - m)(f + m + 2)/4 from level m to m + 1, twice-units.
Rational raise_weight(int tf, int tm) {
  return Rational(static_cast<long long>(tf - tm) * (tf + tm + 2), 4);
}

// Lowering weight (f + m)(f - m + 2)/4 from level m to m - 1, twice-units.
Rational lower_weight(int tf, int tm) {
  return Rational(static_cast<long long>(tf + tm) * (tf - tm + 2), 4);
}

}  // namespace

std::string HalfInt::str() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

CouplingScheme::CouplingScheme(HalfInt l_in, HalfInt s_in) : l(l_in), s(s_in) {
  if (s.twice < 0 || l.twice < s.twice)
    throw std::invalid_argument("coupling scheme requires l >= s >= 0");
}

std::vector<Multiplet> irrep_fibration(const CouplingScheme& scheme) {
  std::vector<Multiplet> out;
  for (int tj = scheme.l.twice - scheme.s.twice; tj <= scheme.l.twice + scheme.s.twice; tj += 2)
    out.push_back({half(tj), tj + 1});
  return out;
}

std::vector<IrrepLabel> irrep_labels(const CouplingScheme& scheme) {
  std::vector<IrrepLabel> out;
  for (const auto& mult : irrep_fibration(scheme))
    for (int tmj = -mult.j.twice; tmj <= mult.j.twice; tmj += 2)
      out.push_back({mult.j, half(tmj)});
  return out;
}

std::vector<std::pair<HalfInt, HalfInt>> product_labels(const CouplingScheme& scheme) {
  std::vector<std::pair<HalfInt, HalfInt>> out;
  for (int tml = -scheme.l.twice; tml <= scheme.l.twice; tml += 2)
    for (int tms = -scheme.s.twice; tms <= scheme.s.twice; tms += 2)
      out.emplace_back(half(tml), half(tms));
  return out;
}

CGTable::CGTable(const CouplingScheme& scheme) : scheme_(scheme) {
  const int tl = scheme.l.twice;
  const int ts = scheme.s.twice;

  for (int tj = tl + ts; tj >= tl - ts; tj -= 2) {
    // Top state of the block on the magnetic level m = j.
    std::map<int, SqrtRational> row;  // 2ml -> coefficient, 2ms = tj - 2ml
    const int tml_max = std::min(tl, tj + ts);
    const int tml_min = std::max(-tl, tj - ts);
    row[tml_max] = SqrtRational(1, Rational(1));
    if (tj < tl + ts) {
      // Kernel of the total raising operator: raising into each level-(j+1)
      // slot (ml, tj + 2 - ml) must cancel, linking adjacent coefficients.
      for (int tml = tml_max; tml > tml_min; tml -= 2) {
        Rational ratio = raise_weight(ts, tj - tml) / raise_weight(tl, tml - 2);
        row[tml - 2] = row[tml].scaled_by(Rational(-1)) * SqrtRational::sqrt_of(ratio);
      }
      Rational total(0);
      for (const auto& [tml, c] : row) total = total + c.square();
      for (auto& [tml, c] : row) c = SqrtRational(c.sign(), c.square() / total);
      if (row.rbegin()->second.sign() < 0)
        throw std::logic_error("phase construction lost the positive top component");
    }

    for (int tmj = tj; tmj >= -tj; tmj -= 2) {
      if (tmj < tj) {
        // One step of the total lowering operator.
        std::map<int, SqrtRational> next;
        const Rational jw = lower_weight(tj, tmj + 2);
        for (const auto& [tml, c] : row) {
          const int tms = (tmj + 2) - tml;
          Rational wl = lower_weight(tl, tml);
          if (!wl.is_zero()) next[tml - 2] = next[tml - 2] + c * SqrtRational::sqrt_of(wl);
          Rational ws = lower_weight(ts, tms);
          if (!ws.is_zero()) next[tml] = next[tml] + c * SqrtRational::sqrt_of(ws);
        }
        for (auto& [tml, c] : next) c = SqrtRational(c.sign(), c.square() / jw);
        row = std::move(next);
      }
      Rational check(0);
      for (const auto& [tml, c] : row) {
        coeff_[{tj, tmj, tml}] = c;
        check = check + c.square();
      }
      if (!(check == Rational(1)))
        throw std::logic_error("coefficient row does not normalize exactly");
    }
  }
}

void CGTable::validate_labels(HalfInt j, HalfInt mj, HalfInt ml, HalfInt ms) const {
  const int tl = scheme_.l.twice;
  const int ts = scheme_.s.twice;
  const bool j_ok = j.twice >= tl - ts && j.twice <= tl + ts &&
                    (j.twice - (tl + ts)) % 2 == 0;
  const bool mj_ok = std::abs(mj.twice) <= j.twice && (mj.twice - j.twice) % 2 == 0;
  const bool ml_ok = std::abs(ml.twice) <= tl && (ml.twice - tl) % 2 == 0;
  const bool ms_ok = std::abs(ms.twice) <= ts && (ms.twice - ts) % 2 == 0;
  if (!j_ok || !mj_ok || !ml_ok || !ms_ok)
    throw std::invalid_argument("coupling label out of range for scheme (l=" +
                                scheme_.l.str() + ", s=" + scheme_.s.str() + ")");
}

SqrtRational CGTable::coeff(HalfInt j, HalfInt mj, HalfInt ml, HalfInt ms) const {
  validate_labels(j, mj, ml, ms);
  if (mj.twice != ml.twice + ms.twice) return SqrtRational();
  auto it = coeff_.find({j.twice, mj.twice, ml.twice});
  if (it == coeff_.end()) return SqrtRational();
  return it->second;
}

Rational CGTable::subsystem_weight(HalfInt j, HalfInt mj, Side side, HalfInt m) const {
  const int t_other = (side == Side::A) ? scheme_.s.twice : scheme_.l.twice;
  Rational total(0);
  for (int tm_other = -t_other; tm_other <= t_other; tm_other += 2) {
    const HalfInt ml = (side == Side::A) ? m : half(tm_other);
    const HalfInt ms = (side == Side::A) ? half(tm_other) : m;
    total = total + coeff(j, mj, ml, ms).square();
  }
  return total;
}

void CGTable::write_table(std::ostream& os) const {
  os << "j m_j m_l m_s sign numerator denominator\n";
  for (const auto& label : irrep_labels(scheme_)) {
    for (const auto& [ml, ms] : product_labels(scheme_)) {
      if (ml.twice + ms.twice != label.mj.twice) continue;
      SqrtRational c = coeff(label.j, label.mj, ml, ms);
      os << label.j.str() << ' ' << label.mj.str() << ' ' << ml.str() << ' ' << ms.str()
         << ' ' << c.sign() << ' ' << c.square().num() << ' ' << c.square().den() << '\n';
    }
  }
}

const CGTable& cg_table(const CouplingScheme& scheme) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<CGTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(scheme.l.twice, scheme.s.twice);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<CGTable>(scheme)).first;
  return *it->second;
}

SqrtRational clebsch_gordan(const CouplingScheme& scheme, HalfInt j, HalfInt mj,
                            HalfInt ml, HalfInt ms) {
  return cg_table(scheme).coeff(j, mj, ml, ms);
}

Matrix coupling_unitary(const CouplingScheme& scheme) {
  const CGTable& table = cg_table(scheme);
  const auto rows = irrep_labels(scheme);
  const auto cols = product_labels(scheme);
  Matrix u = Matrix::Zero(scheme.dim(), scheme.dim());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].first.twice + cols[c].second.twice != rows[r].mj.twice) continue;
      u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          table.coeff(rows[r].j, rows[r].mj, cols[c].first, cols[c].second).value();
    }
  return u;
}

}  // namespace spinent
