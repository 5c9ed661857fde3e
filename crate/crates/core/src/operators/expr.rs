use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{OperatorError, RootType};
use crate::arith::{int, Monomial, Permutation, Polynomial, Rational};

/// Linear operator on polynomials in `N` variables, kept as an expression
/// tree and evaluated strictly.
///
/// Primitive constructors on this type take 0-based variable indices.
#[derive(Clone)]
pub struct Operator {
    nvars: usize,
    type_b: bool,
    node: Arc<Node>,
}

enum Node {
    Multiply(Polynomial),
    Derivative(usize),
    Exchange(usize, usize),
    Permute(Permutation),
    SignFlip(usize),
    DdMinus(usize, usize),
    DdPlus(usize, usize),
    SignDivided(usize),
    Scalar(Rational),
    Sum(Vec<Operator>),
    /// Applied right to left.
    Compose(Vec<Operator>),
    Power(Operator, u32),
}

impl Operator {
    fn prim(nvars: usize, node: Node) -> Self {
        let type_b = matches!(
            node,
            Node::SignFlip(_) | Node::DdPlus(..) | Node::SignDivided(_)
        );
        Operator {
            nvars,
            type_b,
            node: Arc::new(node),
        }
    }

    pub fn identity(nvars: usize) -> Self {
        Self::scalar(nvars, Rational::one())
    }

    pub fn zero(nvars: usize) -> Self {
        Self::sum(nvars, Vec::new())
    }

    pub fn scalar(nvars: usize, c: Rational) -> Self {
        Self::prim(nvars, Node::Scalar(c))
    }

    pub fn multiply(p: Polynomial) -> Self {
        Self::prim(p.nvars(), Node::Multiply(p))
    }

    /// Multiplication by `x_j`.
    pub fn var(nvars: usize, j: usize) -> Self {
        Self::multiply(Polynomial::var(nvars, j))
    }

    pub fn derivative(nvars: usize, j: usize) -> Self {
        Self::prim(nvars, Node::Derivative(j))
    }

    /// The transposition `s_{ij}` acting on variables.
    pub fn exchange(nvars: usize, i: usize, j: usize) -> Self {
        Self::prim(nvars, Node::Exchange(i, j))
    }

    pub fn permute(w: Permutation) -> Self {
        Self::prim(w.len(), Node::Permute(w))
    }

    /// `t_j : x_j -> -x_j`.
    pub fn sign_flip(nvars: usize, j: usize) -> Self {
        Self::prim(nvars, Node::SignFlip(j))
    }

    /// `(1 - s_{jk}) / (x_j - x_k)`.
    pub fn divided_diff_minus(nvars: usize, j: usize, k: usize) -> Self {
        Self::prim(nvars, Node::DdMinus(j, k))
    }

    /// `(1 - t_j t_k s_{jk}) / (x_j + x_k)`.
    pub fn divided_diff_plus(nvars: usize, j: usize, k: usize) -> Self {
        Self::prim(nvars, Node::DdPlus(j, k))
    }

    /// `(1 - t_j) / x_j`.
    pub fn sign_divided(nvars: usize, j: usize) -> Self {
        Self::prim(nvars, Node::SignDivided(j))
    }

    pub fn sum(nvars: usize, ops: Vec<Operator>) -> Self {
        for op in &ops {
            assert_eq!(op.nvars, nvars, "ambient size mismatch");
        }
        let type_b = ops.iter().any(|o| o.type_b);
        Operator {
            nvars,
            type_b,
            node: Arc::new(Node::Sum(ops)),
        }
    }

    /// `ops[0] ∘ ops[1] ∘ ..`; the last factor acts first.
    pub fn compose_all(nvars: usize, ops: Vec<Operator>) -> Self {
        if ops.is_empty() {
            return Self::identity(nvars);
        }
        for op in &ops {
            assert_eq!(op.nvars, nvars, "ambient size mismatch");
        }
        let type_b = ops.iter().any(|o| o.type_b);
        Operator {
            nvars,
            type_b,
            node: Arc::new(Node::Compose(ops)),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Operator) -> Operator {
        Self::compose_all(self.nvars, vec![self.clone(), other.clone()])
    }

    pub fn pow(&self, k: u32) -> Operator {
        Operator {
            nvars: self.nvars,
            type_b: self.type_b,
            node: Arc::new(Node::Power(self.clone(), k)),
        }
    }

    pub fn scale(&self, c: &Rational) -> Operator {
        if c.is_one() {
            return self.clone();
        }
        Self::scalar(self.nvars, c.clone()).compose(self)
    }

    /// `self + c·id`.
    pub fn shift(&self, c: &Rational) -> Operator {
        if c.is_zero() {
            return self.clone();
        }
        self + &Self::scalar(self.nvars, c.clone())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// `B` if the tree contains a type-B primitive.
    pub fn root_type(&self) -> RootType {
        if self.type_b {
            RootType::B
        } else {
            RootType::A
        }
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial, OperatorError> {
        self.apply_in(self.root_type(), f)
    }

    /// Applies in an explicit context; type-B primitives are rejected in an
    /// A-type context.
    pub fn apply_in(&self, ctx: RootType, f: &Polynomial) -> Result<Polynomial, OperatorError> {
        if f.nvars() != self.nvars {
            return Err(OperatorError::SizeMismatch(self.nvars, f.nvars()));
        }
        if ctx == RootType::A && self.type_b {
            return Err(OperatorError::TypeBInTypeA);
        }
        Ok(self.eval(f))
    }

    fn eval(&self, f: &Polynomial) -> Polynomial {
        match &*self.node {
            Node::Multiply(p) => p * f,
            Node::Derivative(j) => f.derivative(*j),
            Node::Exchange(i, j) => f.swap_vars(*i, *j),
            Node::Permute(w) => f.permute(w),
            Node::SignFlip(j) => f.flip_sign(*j),
            Node::DdMinus(j, k) => f.map_terms(|m, c, out| dd_minus_term(m, c, *j, *k, false, out)),
            Node::DdPlus(j, k) => f.map_terms(|m, c, out| dd_minus_term(m, c, *j, *k, true, out)),
            Node::SignDivided(j) => f.map_terms(|m, c, out| {
                let e = m.get(*j);
                if e.rem_euclid(2) == 1 {
                    out.add_term(m.with(*j, e - 1), c * int(2));
                }
            }),
            Node::Scalar(c) => f.scale(c),
            Node::Sum(ops) => {
                let mut out = Polynomial::zero(self.nvars);
                for op in ops {
                    out += &op.eval(f);
                }
                out
            }
            Node::Compose(ops) => {
                let mut cur = f.clone();
                for op in ops.iter().rev() {
                    if cur.is_zero() {
                        break;
                    }
                    cur = op.eval(&cur);
                }
                cur
            }
            Node::Power(op, k) => {
                let mut cur = f.clone();
                for _ in 0..*k {
                    cur = op.eval(&cur);
                }
                cur
            }
        }
    }
}

/// Telescoping expansion of `(1 - s_{jk}) x^m / (x_j - x_k)`. With `plus`
/// set, the `(1 - t_j t_k s_{jk}) / (x_j + x_k)` variant: substituting
/// `x_k -> -x_k` turns it into the minus case up to signs.
fn dd_minus_term(m: &Monomial, c: &Rational, j: usize, k: usize, plus: bool, out: &mut Polynomial) {
    let (p, q) = (m.get(j), m.get(k));
    if p == q {
        return;
    }
    let (hi, lo) = if p > q { (p, q) } else { (q, p) };
    let base_sign = if p > q { 1 } else { -1 };
    let mut e = m.clone();
    for s in 0..hi - lo {
        let a = lo + (hi - lo - 1 - s);
        let b = lo + s;
        e.exponents_mut()[j] = a;
        e.exponents_mut()[k] = b;
        let mut sign = base_sign;
        if plus && (q + b).rem_euclid(2) == 1 {
            sign = -sign;
        }
        let coef = if sign > 0 { c.clone() } else { -c };
        out.add_term(e.clone(), coef);
    }
}

impl fmt::Debug for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.node {
            Node::Multiply(p) => write!(f, "mul({p})"),
            Node::Derivative(j) => write!(f, "d{}", j + 1),
            Node::Exchange(i, j) => write!(f, "s{}{}", i + 1, j + 1),
            Node::Permute(w) => write!(f, "perm[{w}]"),
            Node::SignFlip(j) => write!(f, "t{}", j + 1),
            Node::DdMinus(j, k) => write!(f, "ddm{}{}", j + 1, k + 1),
            Node::DdPlus(j, k) => write!(f, "ddp{}{}", j + 1, k + 1),
            Node::SignDivided(j) => write!(f, "sd{}", j + 1),
            Node::Scalar(c) => write!(f, "{c}"),
            Node::Sum(ops) => {
                write!(f, "(")?;
                for (i, o) in ops.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{o:?}")?;
                }
                write!(f, ")")
            }
            Node::Compose(ops) => {
                for (i, o) in ops.iter().enumerate() {
                    if i > 0 {
                        write!(f, "∘")?;
                    }
                    write!(f, "{o:?}")?;
                }
                Ok(())
            }
            Node::Power(o, k) => write!(f, "({o:?})^{k}"),
        }
    }
}

impl Add for &Operator {
    type Output = Operator;
    fn add(self, rhs: &Operator) -> Operator {
        Operator::sum(self.nvars, vec![self.clone(), rhs.clone()])
    }
}

impl Add for Operator {
    type Output = Operator;
    fn add(self, rhs: Operator) -> Operator {
        &self + &rhs
    }
}

impl Sub for &Operator {
    type Output = Operator;
    fn sub(self, rhs: &Operator) -> Operator {
        self + &(-rhs)
    }
}

impl Sub for Operator {
    type Output = Operator;
    fn sub(self, rhs: Operator) -> Operator {
        &self - &rhs
    }
}

impl Neg for &Operator {
    type Output = Operator;
    fn neg(self) -> Operator {
        self.scale(&-Rational::one())
    }
}

impl Neg for Operator {
    type Output = Operator;
    fn neg(self) -> Operator {
        -&self
    }
}

/// Composition: `(a * b)(f) = a(b(f))`.
impl Mul for &Operator {
    type Output = Operator;
    fn mul(self, rhs: &Operator) -> Operator {
        self.compose(rhs)
    }
}

impl Mul for Operator {
    type Output = Operator;
    fn mul(self, rhs: Operator) -> Operator {
        self.compose(&rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_polynomial;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, n).unwrap()
    }

    #[test]
    fn primitive_examples() {
        let ex = Operator::exchange(2, 0, 1);
        assert_eq!(ex.apply(&p("x1^2*x2", 2)).unwrap(), p("x1*x2^2", 2));

        let dd = Operator::divided_diff_minus(2, 0, 1);
        assert_eq!(
            dd.apply(&p("x1^3", 2)).unwrap(),
            p("x1^2 + x1*x2 + x2^2", 2)
        );
        assert_eq!(dd.apply(&p("x2^2", 2)).unwrap(), p("-x1 - x2", 2));
        assert!(dd.apply(&p("x1*x2", 2)).unwrap().is_zero());

        let sd = Operator::sign_divided(1, 0);
        assert_eq!(sd.apply(&p("z^3", 1)).unwrap(), p("2*z^2", 1));
        assert!(sd.apply(&p("z^2", 1)).unwrap().is_zero());
    }

    /// Oracle: multiply the result back by the denominator.
    #[test]
    fn divided_differences_invert_their_denominators() {
        let n = 3;
        let t = |j: usize| Operator::sign_flip(n, j);
        for m in Monomial::all_up_to(n, 5) {
            let f = Polynomial::term(m, Rational::one());
            let (xj, xk) = (Polynomial::var(n, 0), Polynomial::var(n, 2));
            let minus = Operator::divided_diff_minus(n, 0, 2).apply(&f).unwrap();
            assert_eq!(&minus * &(&xj - &xk), &f - &f.swap_vars(0, 2));
            let plus = Operator::divided_diff_plus(n, 0, 2).apply(&f).unwrap();
            let tts = (&t(0) * &t(2)) * Operator::exchange(n, 0, 2);
            assert_eq!(&plus * &(&xj + &xk), &f - &tts.apply(&f).unwrap());
            let sd = Operator::sign_divided(n, 1).apply(&f).unwrap();
            assert_eq!(&sd * &Polynomial::var(n, 1), &f - &f.flip_sign(1));
        }
    }

    #[test]
    fn type_b_context_is_enforced() {
        let f = p("x1", 2);
        let op = Operator::derivative(2, 0) + Operator::sign_flip(2, 0);
        assert_eq!(op.root_type(), RootType::B);
        assert_eq!(
            op.apply_in(RootType::A, &f),
            Err(OperatorError::TypeBInTypeA)
        );
        assert!(op.apply_in(RootType::B, &f).is_ok());
        assert!(Operator::derivative(2, 0).apply_in(RootType::A, &f).is_ok());
        assert_eq!(
            Operator::derivative(3, 0).apply(&f),
            Err(OperatorError::SizeMismatch(3, 2))
        );
    }

    #[test]
    fn combinators() {
        let n = 2;
        let x1 = Operator::var(n, 0);
        let d1 = Operator::derivative(n, 0);
        let f = p("x1^2 + x2", n);
        // [d, x] = 1
        let comm = &(&d1 * &x1) - &(&x1 * &d1);
        assert_eq!(comm.apply(&f).unwrap(), f);
        assert_eq!(d1.pow(2).apply(&f).unwrap(), p("2", n));
        assert_eq!(Operator::zero(n).apply(&f).unwrap(), Polynomial::zero(n));
        assert_eq!(x1.shift(&int(3)).apply(&p("1", n)).unwrap(), p("x1 + 3", n));
    }
}
