//! Exact integer products and sums with an `i128` fast path.

use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Clone, Debug)]
pub(crate) enum Product {
    Small(i128),
    Big(BigInt),
}

impl Product {
    pub(crate) fn one() -> Self {
        Product::Small(1)
    }

    pub(crate) fn is_zero(&self) -> bool {
        match self {
            Product::Small(v) => *v == 0,
            Product::Big(v) => v.is_zero(),
        }
    }

    pub(crate) fn times(&self, factor: i128) -> Self {
        match self {
            Product::Small(v) => match v.checked_mul(factor) {
                Some(p) => Product::Small(p),
                None => Product::Big(BigInt::from(*v) * factor),
            },
            Product::Big(v) => Product::Big(v * factor),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub(crate) struct Sum {
    small: i128,
    big: BigInt,
}

impl Sum {
    pub(crate) fn add(&mut self, term: Product) {
        match term {
            Product::Small(v) => match self.small.checked_add(v) {
                Some(s) => self.small = s,
                None => {
                    self.big += self.small;
                    self.small = v;
                }
            },
            Product::Big(v) => self.big += v,
        }
    }

    pub(crate) fn merge(mut self, other: Sum) -> Sum {
        self.add(Product::Small(other.small));
        self.big += other.big;
        self
    }

    pub(crate) fn finish(self) -> BigInt {
        self.big + self.small
    }
}
