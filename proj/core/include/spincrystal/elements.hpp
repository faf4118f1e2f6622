#pragma once

#include <memory>
#include <string>
#include <vector>

#include "spincrystal/cartan.hpp"
#include "spincrystal/crystal.hpp"
#include "spincrystal/partitions.hpp"

namespace spincrystal {

/// Integer extended by -infinity, for eps/phi of elementary crystals.
class ExtInt {
public:
    ExtInt() : inf_(true), v_(0) {}
    ExtInt(long long v) : inf_(false), v_(v) {}  // NOLINT: implicit on purpose
    static ExtInt neg_inf() { return ExtInt(); }

    bool is_neg_inf() const { return inf_; }
    long long value() const {
        if (inf_) throw std::domain_error("ExtInt: -infinity has no value");
        return v_;
    }
    ExtInt operator+(long long k) const { return inf_ ? ExtInt() : ExtInt(v_ + k); }
    ExtInt operator-(long long k) const { return *this + (-k); }
    bool operator==(const ExtInt& o) const {
        return inf_ == o.inf_ && (inf_ || v_ == o.v_);
    }
    bool operator<(const ExtInt& o) const {
        if (inf_) return !o.inf_;
        return !o.inf_ && v_ < o.v_;
    }
    bool operator>=(const ExtInt& o) const { return !(*this < o); }
    std::string str() const { return inf_ ? "-inf" : std::to_string(v_); }

private:
    bool inf_;
    long long v_;
};

class CrystalElement;
using ElementPtr = std::shared_ptr<const CrystalElement>;

/// Abstract element of an abstract crystal; e_tilde/f_tilde return nullptr
/// for the zero element.
class CrystalElement {
public:
    virtual ~CrystalElement() = default;
    virtual ExtInt eps(Residue i) const = 0;
    virtual ExtInt phi(Residue i) const = 0;
    virtual ElementPtr e_tilde(Residue i) const = 0;
    virtual ElementPtr f_tilde(Residue i) const = 0;
    virtual Weight wt() const = 0;
    virtual std::string str() const = 0;
    virtual bool equals(const CrystalElement& o) const = 0;
};

/// An h-strict partition as an element of the partition crystal.
class PartitionElement : public CrystalElement {
public:
    PartitionElement(Partition lam, CartanType ct);
    ExtInt eps(Residue i) const override;
    ExtInt phi(Residue i) const override;
    ElementPtr e_tilde(Residue i) const override;
    ElementPtr f_tilde(Residue i) const override;
    Weight wt() const override;
    std::string str() const override;
    bool equals(const CrystalElement& o) const override;
    const Partition& partition() const { return lam_; }

private:
    Partition lam_;
    CartanType ct_;
};

/// Element b_i(n) of the elementary crystal B_i: wt = n alpha_i,
/// eps_i = -n, phi_i = n, and -infinity at every other residue.
class ElementBi : public CrystalElement {
public:
    ElementBi(Residue i, long long n, CartanType ct);
    ExtInt eps(Residue j) const override;
    ExtInt phi(Residue j) const override;
    ElementPtr e_tilde(Residue j) const override;
    ElementPtr f_tilde(Residue j) const override;
    Weight wt() const override;
    std::string str() const override;
    bool equals(const CrystalElement& o) const override;

private:
    Residue i_;
    long long n_;
    CartanType ct_;
};

/// The one-element crystal T_lambda: eps = phi = -infinity everywhere,
/// all operators kill it.
class ElementTLambda : public CrystalElement {
public:
    ElementTLambda(Weight lambda, CartanType ct);
    ExtInt eps(Residue i) const override;
    ExtInt phi(Residue i) const override;
    ElementPtr e_tilde(Residue i) const override;
    ElementPtr f_tilde(Residue i) const override;
    Weight wt() const override;
    std::string str() const override;
    bool equals(const CrystalElement& o) const override;

private:
    Weight lambda_;
    CartanType ct_;
};

/// b1 (x) b2 with the signature tensor rule: e_tilde acts on the left
/// factor when phi(b1) >= eps(b2), otherwise on the right; dually for
/// f_tilde.
class TensorElement : public CrystalElement {
public:
    TensorElement(ElementPtr left, ElementPtr right, CartanType ct);
    ExtInt eps(Residue i) const override;
    ExtInt phi(Residue i) const override;
    ElementPtr e_tilde(Residue i) const override;
    ElementPtr f_tilde(Residue i) const override;
    Weight wt() const override;
    std::string str() const override;
    bool equals(const CrystalElement& o) const override;
    const ElementPtr& left() const { return left_; }
    const ElementPtr& right() const { return right_; }

private:
    ElementPtr left_;
    ElementPtr right_;
    CartanType ct_;
};

ElementPtr tensor(ElementPtr left, ElementPtr right, const CartanType& ct);

/// Axiom check over a finite element set:
///  - phi_i = eps_i + <h_i, wt> (both -infinity together);
///  - e_tilde shifts (eps, phi, wt) by (-1, +1, +alpha_i), f_tilde dually;
///  - e_tilde and f_tilde are mutually inverse where defined;
///  - phi_i = -infinity forces e_tilde = f_tilde = 0.
/// f_tilde images outside the set are listed, not treated as violations.
struct AxiomReport {
    std::vector<std::string> violations;
    std::vector<std::string> outside_f_images;
    long long checks = 0;
    bool ok() const { return violations.empty(); }
};

AxiomReport verify_axioms(const std::vector<ElementPtr>& elements, const CartanType& ct,
                          const std::vector<Residue>& residues);

}  // namespace spincrystal
