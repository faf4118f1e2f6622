#include "spincrystal/elements.hpp"

#include <algorithm>
#include <sstream>

namespace spincrystal {

// ---------- PartitionElement ----------

PartitionElement::PartitionElement(Partition lam, CartanType ct)
    : lam_(std::move(lam)), ct_(ct) {
    if (!is_h_strict(lam_, ct_))
        throw std::invalid_argument("PartitionElement: not h-strict: " + to_string(lam_));
}

ExtInt PartitionElement::eps(Residue i) const { return spincrystal::eps(lam_, ct_, i); }
ExtInt PartitionElement::phi(Residue i) const { return spincrystal::phi(lam_, ct_, i); }

ElementPtr PartitionElement::e_tilde(Residue i) const {
    auto mu = spincrystal::e_tilde(lam_, ct_, i);
    if (!mu) return nullptr;
    return std::make_shared<PartitionElement>(*mu, ct_);
}

ElementPtr PartitionElement::f_tilde(Residue i) const {
    auto mu = spincrystal::f_tilde(lam_, ct_, i);
    if (!mu) return nullptr;
    return std::make_shared<PartitionElement>(*mu, ct_);
}

Weight PartitionElement::wt() const {
    Weight w;
    w.lambda0 = 1;
    ContentVector gamma = content(lam_, ct_);
    for (auto& [i, c] : gamma.entries()) w.add_alpha(i, -c);
    return w;
}

std::string PartitionElement::str() const { return to_string(lam_); }

bool PartitionElement::equals(const CrystalElement& o) const {
    auto* p = dynamic_cast<const PartitionElement*>(&o);
    return p && p->lam_ == lam_;
}

// ---------- ElementBi ----------

ElementBi::ElementBi(Residue i, long long n, CartanType ct) : i_(i), n_(n), ct_(ct) {
    if (!ct.in_index_set(i))
        throw std::out_of_range("ElementBi: residue outside index set");
}

ExtInt ElementBi::eps(Residue j) const {
    return j == i_ ? ExtInt(-n_) : ExtInt::neg_inf();
}

ExtInt ElementBi::phi(Residue j) const {
    return j == i_ ? ExtInt(n_) : ExtInt::neg_inf();
}

ElementPtr ElementBi::e_tilde(Residue j) const {
    if (j != i_) return nullptr;
    return std::make_shared<ElementBi>(i_, n_ + 1, ct_);
}

ElementPtr ElementBi::f_tilde(Residue j) const {
    if (j != i_) return nullptr;
    return std::make_shared<ElementBi>(i_, n_ - 1, ct_);
}

Weight ElementBi::wt() const {
    Weight w;
    w.add_alpha(i_, n_);
    return w;
}

std::string ElementBi::str() const {
    return "b_" + std::to_string(i_) + "(" + std::to_string(n_) + ")";
}

bool ElementBi::equals(const CrystalElement& o) const {
    auto* p = dynamic_cast<const ElementBi*>(&o);
    return p && p->i_ == i_ && p->n_ == n_;
}

// ---------- ElementTLambda ----------

ElementTLambda::ElementTLambda(Weight lambda, CartanType ct)
    : lambda_(std::move(lambda)), ct_(ct) {}

ExtInt ElementTLambda::eps(Residue) const { return ExtInt::neg_inf(); }
ExtInt ElementTLambda::phi(Residue) const { return ExtInt::neg_inf(); }
ElementPtr ElementTLambda::e_tilde(Residue) const { return nullptr; }
ElementPtr ElementTLambda::f_tilde(Residue) const { return nullptr; }
Weight ElementTLambda::wt() const { return lambda_; }

std::string ElementTLambda::str() const {
    std::ostringstream os;
    os << "t(" << lambda_.lambda0 << "L0";
    for (auto& [i, c] : lambda_.alpha) os << (c >= 0 ? "+" : "") << c << "a" << i;
    os << ")";
    return os.str();
}

bool ElementTLambda::equals(const CrystalElement& o) const {
    auto* p = dynamic_cast<const ElementTLambda*>(&o);
    return p && p->lambda_ == lambda_;
}

// ---------- TensorElement ----------

TensorElement::TensorElement(ElementPtr left, ElementPtr right, CartanType ct)
    : left_(std::move(left)), right_(std::move(right)), ct_(ct) {
    if (!left_ || !right_)
        throw std::invalid_argument("TensorElement: factors must be nonzero");
}

ExtInt TensorElement::eps(Residue i) const {
    ExtInt a = left_->eps(i);
    ExtInt b = right_->eps(i) - pairing_weight(i, left_->wt(), ct_);
    return std::max(a, b);
}

ExtInt TensorElement::phi(Residue i) const {
    ExtInt a = left_->phi(i) + pairing_weight(i, right_->wt(), ct_);
    ExtInt b = right_->phi(i);
    return std::max(a, b);
}

ElementPtr TensorElement::e_tilde(Residue i) const {
    if (left_->phi(i) >= right_->eps(i)) {
        auto e = left_->e_tilde(i);
        if (!e) return nullptr;
        return std::make_shared<TensorElement>(e, right_, ct_);
    }
    auto e = right_->e_tilde(i);
    if (!e) return nullptr;
    return std::make_shared<TensorElement>(left_, e, ct_);
}

ElementPtr TensorElement::f_tilde(Residue i) const {
    if (right_->eps(i) >= left_->phi(i)) {
        auto f = right_->f_tilde(i);
        if (!f) return nullptr;
        return std::make_shared<TensorElement>(left_, f, ct_);
    }
    auto f = left_->f_tilde(i);
    if (!f) return nullptr;
    return std::make_shared<TensorElement>(f, right_, ct_);
}

Weight TensorElement::wt() const { return left_->wt() + right_->wt(); }

std::string TensorElement::str() const {
    return left_->str() + " (x) " + right_->str();
}

bool TensorElement::equals(const CrystalElement& o) const {
    auto* p = dynamic_cast<const TensorElement*>(&o);
    return p && p->left_->equals(*left_) && p->right_->equals(*right_);
}

ElementPtr tensor(ElementPtr left, ElementPtr right, const CartanType& ct) {
    if (!left || !right) return nullptr;  // b (x) 0 = 0 = 0 (x) b
    return std::make_shared<TensorElement>(std::move(left), std::move(right), ct);
}

// ---------- axiom verification ----------

namespace {

bool same_weight(const Weight& a, const Weight& b) { return a == b; }

Weight plus_alpha(const Weight& w, Residue i, long long k) {
    Weight v = w;
    v.add_alpha(i, k);
    return v;
}

bool in_set(const std::vector<ElementPtr>& set, const CrystalElement& b) {
    return std::any_of(set.begin(), set.end(),
                       [&](const ElementPtr& x) { return x->equals(b); });
}

}  // namespace

AxiomReport verify_axioms(const std::vector<ElementPtr>& elements, const CartanType& ct,
                          const std::vector<Residue>& residues) {
    AxiomReport rep;
    auto fail = [&](const CrystalElement& b, Residue i, const std::string& what) {
        rep.violations.push_back(b.str() + " @ i=" + std::to_string(i) + ": " + what);
    };

    for (const auto& bp : elements) {
        const CrystalElement& b = *bp;
        for (Residue i : residues) {
            ++rep.checks;
            ExtInt e = b.eps(i), p = b.phi(i);

            // phi = eps + <h_i, wt>, with -infinity only in tandem
            if (e.is_neg_inf() != p.is_neg_inf())
                fail(b, i, "eps/phi -infinity mismatch");
            else if (!e.is_neg_inf() &&
                     p.value() != e.value() + pairing_weight(i, b.wt(), ct))
                fail(b, i, "phi != eps + <h_i, wt>");

            // phi = -infinity kills the element
            if (p.is_neg_inf() && (b.e_tilde(i) || b.f_tilde(i)))
                fail(b, i, "operators defined despite phi = -infinity");

            if (auto eb = b.e_tilde(i)) {
                if (!(eb->eps(i) == e - 1)) fail(b, i, "eps did not drop under e_tilde");
                if (!(eb->phi(i) == p + 1)) fail(b, i, "phi did not rise under e_tilde");
                if (!same_weight(eb->wt(), plus_alpha(b.wt(), i, 1)))
                    fail(b, i, "wt did not gain alpha_i under e_tilde");
                auto back = eb->f_tilde(i);
                if (!back || !back->equals(b)) fail(b, i, "f_tilde(e_tilde(b)) != b");
                if (!in_set(elements, *eb)) fail(b, i, "set not closed under e_tilde");
            }

            if (auto fb = b.f_tilde(i)) {
                if (!(fb->eps(i) == e + 1)) fail(b, i, "eps did not rise under f_tilde");
                if (!(fb->phi(i) == p - 1)) fail(b, i, "phi did not drop under f_tilde");
                if (!same_weight(fb->wt(), plus_alpha(b.wt(), i, -1)))
                    fail(b, i, "wt did not lose alpha_i under f_tilde");
                auto back = fb->e_tilde(i);
                if (!back || !back->equals(b)) fail(b, i, "e_tilde(f_tilde(b)) != b");
                if (!in_set(elements, *fb))
                    rep.outside_f_images.push_back(b.str() + " -f" + std::to_string(i) +
                                                   "-> " + fb->str());
            }
        }
    }
    return rep;
}

}  // namespace spincrystal
