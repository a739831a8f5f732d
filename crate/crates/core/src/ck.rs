//! Overflow-propagating `i128` arithmetic.
//!
//! `Ck` carries `None` once any intermediate overflows, so closed-form
//! expressions can be written with ordinary operators and checked once.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ck(pub Option<i128>);

impl Ck {
    pub fn new(v: i128) -> Self {
        Ck(Some(v))
    }

    pub fn get(self, ctx: &'static str) -> Result<i128> {
        self.0.ok_or(Error::Overflow(ctx))
    }

    pub fn pow(self, e: u32) -> Ck {
        Ck(self.0.and_then(|v| v.checked_pow(e)))
    }

    /// Exact division; `None` also when the division leaves a remainder.
    pub fn div_exact(self, d: i128) -> Option<Ck> {
        match self.0 {
            Some(v) if d != 0 && v % d == 0 => Some(Ck(Some(v / d))),
            Some(_) => None,
            None => Some(Ck(None)),
        }
    }
}

impl From<i128> for Ck {
    fn from(v: i128) -> Self {
        Ck(Some(v))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for Ck {
            type Output = Ck;
            fn $method(self, rhs: Ck) -> Ck {
                Ck(match (self.0, rhs.0) {
                    (Some(a), Some(b)) => a.$checked(b),
                    _ => None,
                })
            }
        }
        impl $tr<i128> for Ck {
            type Output = Ck;
            fn $method(self, rhs: i128) -> Ck {
                Ck(self.0.and_then(|a| a.$checked(rhs)))
            }
        }
        impl $tr<Ck> for i128 {
            type Output = Ck;
            fn $method(self, rhs: Ck) -> Ck {
                Ck(rhs.0.and_then(|b| self.$checked(b)))
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for Ck {
    type Output = Ck;
    fn neg(self) -> Ck {
        Ck(self.0.and_then(|a| a.checked_neg()))
    }
}
