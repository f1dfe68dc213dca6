#ifndef RSG_CONSTRUCT_HPP
#define RSG_CONSTRUCT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsg/congruence.hpp"
#include "rsg/cset.hpp"
#include "rsg/lattice.hpp"
#include "rsg/rsemigroup.hpp"

namespace rsg {

  // A plain monoid (no unary operations).
  class Monoid {
   public:
    Monoid() = default;
    // Throws InputError unless mul is associative with two-sided identity.
    Monoid(Table const& mul, Elem identity, std::vector<std::string> labels = {});
    // Multiplicative reduct of a restriction monoid (PreconditionError if s
    // has no identity).
    static Monoid of(RSemigroup const& s);
    static Monoid trivial();
    static Monoid cyclic_group(std::size_t n);

    std::size_t order() const { return n_; }
    Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }
    Elem identity() const { return one_; }
    Table table() const;
    std::vector<std::string> const& labels() const { return labels_; }
    std::string name(Elem a) const;

    bool is_group() const;
    // The reduced restriction monoid on T (a+ = a* = 1).
    RSemigroup as_reduced() const;

    friend bool operator==(Monoid const& a, Monoid const& b) {
      return a.mul_ == b.mul_ && a.one_ == b.one_;
    }

   private:
    std::size_t              n_   = 0;
    std::vector<Elem>        mul_;
    Elem                     one_ = 0;
    std::vector<std::string> labels_;
  };

  enum class ActionKind { homomorphism, subhomomorphism };
  std::string to_string(ActionKind k);

  // t -> alpha_t, an isomorphism between ideals of Y.
  struct MonoidAction {
    Monoid                monoid;
    Semilattice           semilattice;
    std::vector<IdealIso> alpha;
    ActionKind            kind = ActionKind::homomorphism;

    ElemSet dom(Elem t) const { return alpha[t].dom(); }
    ElemSet ran(Elem t) const { return alpha[t].ran(); }
  };

  // Requires alpha(1) = id_Y (InputError otherwise); the kind is
  // homomorphism when alpha(t)alpha(u) = alpha(tu) throughout, else
  // subhomomorphism when alpha(t)alpha(u) <= alpha(tu) throughout, else
  // InputError. A declared kind that differs from the computed one is a
  // PreconditionError.
  MonoidAction validate_action(Monoid                    t,
                               Semilattice               y,
                               std::vector<IdealIso>     alpha,
                               std::optional<ActionKind> declared = {});

  // (t, f) with f in the range of alpha_t.
  struct WElement {
    Elem t = 0;
    Elem f = 0;
    friend auto operator<=>(WElement const&, WElement const&) = default;
  };

  struct WProduct {
    MonoidAction          action;
    RSemigroup            semigroup;
    std::vector<WElement> catalog;  // sorted by (t, f)
    std::vector<Elem>     lookup;   // t * |Y| + f -> index, or npos

    Elem index_of(Elem t, Elem f) const {
      return lookup[t * action.semilattice.order() + f];
    }
  };

  // (t,g)(u,h) = (tu, (g ^ h alpha_u^-1) alpha_u), (t,g)+ = (1, g alpha_t^-1),
  // (t,g)* = (1, g).
  WProduct w_product(MonoidAction const& act);

  struct STRProduct {
    RSemigroup                         semigroup;
    std::vector<std::pair<Elem, Elem>> catalog;  // (a, t), sorted
    Map                                first;    // -> S
    Map                                second;   // -> T
    ActionKind                         kind = ActionKind::homomorphism;
    Monoid                             t;

    Elem index_of(Elem a, Elem t) const;
  };

  // {(a, t) in S x T : a <= t alpha in R}. r must be a restriction monoid,
  // embed an injective homomorphism S -> R and alpha: T -> R monoidal
  // (InputError otherwise; its kind is computed as for actions). The
  // conditions on (S, R) are checked for every r in R: some projection e of
  // S lies below r+, every such e has er in S, and dually; a failure is a
  // PreconditionError naming r.
  STRProduct s_t_r(RSemigroup const&     s,
                   RSemigroup const&     r,
                   std::span<Elem const> embed,
                   Monoid const&         t,
                   std::span<Elem const> alpha);

  // The cover S_T with T the plain monoid S^1 and alpha the identity.
  STRProduct t_proper_cover(RSemigroup const& s);
  // S_{T, C(S)} with T = S/sigma and alpha = kappa; S must be proper.
  STRProduct special_cover(RSemigroup const& s);

  struct PiIso {
    STRProduct source;  // (T_Y)_{T, TI_Y}
    WProduct   target;  // W(T, Y)
    Map        pi;      // source -> target
    bool       ok = false;
  };
  // Pi: (beta, t) -> (t, e^t) with e the top of the domain of beta.
  PiIso pi_iso(MonoidAction const& act);

  struct Reconstruction {
    Quotient              t;  // S / sigma
    ProjectionSemilattice y;  // P_S
    MonoidAction          action;
    WProduct              w;
    Map                   canonical;  // s -> (s sigma, s*)
    bool                  ok = false;
  };
  // T = S/sigma, Y = P_S, alpha = kappa theta-bar; PreconditionError unless
  // S is proper.
  Reconstruction reconstruct(RSemigroup const& s);

  // True iff alpha'(phi t) = psi^-1 alpha_t psi for the given bijections
  // phi: T -> T' and psi: Y -> Y'.
  bool actions_equivalent(MonoidAction const&   a,
                          MonoidAction const&   b,
                          std::span<Elem const> phi,
                          std::span<Elem const> psi);

  // Compares act with the action recovered from W(act) through the
  // canonical identifications t -> class of (t, f) and f -> (1, f).
  bool round_trip_equivalent(MonoidAction const&   act,
                             WProduct const&       w,
                             Reconstruction const& r);

  struct StToW {
    STRProduct   st;
    MonoidAction action;  // e^t = (e (t alpha))* on (t alpha)+-down
    WProduct     w;
    Map          forward;   // (s, t) -> (t, s*)
    Map          backward;  // (t, f) -> ((t alpha) f, t)
    bool         ok = false;
  };
  // alpha: T -> S^1 (indices into adjoin_identity(s)) must be a monoidal
  // homomorphism whose image P-generates S^1 (PreconditionError otherwise).
  StToW st_to_w(RSemigroup const& s, Monoid const& t, std::span<Elem const> alpha);

  struct CoverReport {
    bool        homomorphism = false;
    bool        p_separating = false;
    bool        full_image   = false;
    bool        onto         = false;
    bool        below_image  = false;  // S inside (T alpha)-down
    STRProduct  target;                // S_{T, C(S)}, alpha = kappa hat-beta
    Map         omega;                 // n -> (n beta, n sigma)
    bool        ok = false;
    std::string failure;
  };
  // beta: N -> S. InputError if beta is not a homomorphism; PreconditionError
  // unless N is almost perfect and beta is P-separating with full image.
  CoverReport verify_cover(RSemigroup const&     n,
                           RSemigroup const&     s,
                           std::span<Elem const> beta);

  struct RRepReport {
    Quotient    f;            // S / mu
    bool        munn_image_iso = false;  // S/mu isomorphic to theta(S)
    CoverReport cover;        // S = F_{T, C(F)} through S -> S/mu
    bool        ok = false;
  };
  // S almost perfect (PreconditionError otherwise).
  RRepReport r_rep(RSemigroup const& s);

  // Every S_{T, C(S)} with T a monoid of order <= max_monoid (up to
  // isomorphism) and alpha: T -> C(S) a monoidal homomorphism with S inside
  // (T alpha)-down. These are the almost perfect covers of S up to
  // isomorphism over such T.
  std::vector<STRProduct> cover_catalog(RSemigroup const& s,
                                        std::size_t       max_monoid);

}  // namespace rsg

#endif  // RSG_CONSTRUCT_HPP
