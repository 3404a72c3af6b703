use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Bit widths of an unsigned fixed-point register: `l` integer bits over `k`
/// fraction bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedLayout {
    pub l: u32,
    pub k: u32,
}

impl Default for FixedLayout {
    fn default() -> Self {
        FixedLayout { l: 8, k: 24 }
    }
}

impl FixedLayout {
    pub fn new(l: u32, k: u32) -> Result<Self> {
        if l == 0 || l + k > 63 {
            return Err(Error::InvalidParameter(format!("fixed-point widths l={l}, k={k} out of range")));
        }
        Ok(FixedLayout { l, k })
    }

    pub fn width(self) -> u32 {
        self.l + self.k
    }

    pub fn max_code(self) -> u64 {
        (1u64 << self.width()) - 1
    }
}

/// `code / 2^k` integer units of `scale` each.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FixedPointCode {
    pub layout: FixedLayout,
    pub code: u64,
    pub scale: f64,
}

impl FixedPointCode {
    pub fn decode(&self) -> f64 {
        self.code as f64 / (1u64 << self.layout.k) as f64 * self.scale
    }

    /// Bit `i`, least significant first.
    pub fn bit(&self, i: u32) -> bool {
        (self.code >> i) & 1 == 1
    }
}

/// `floor(x / scale * 2^k)`, truncating toward zero.
pub fn encode_fixed_point(x: f64, layout: FixedLayout, scale: f64) -> Result<FixedPointCode> {
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(Error::InvalidParameter(format!("fixed-point scale {scale} must be > 0")));
    }
    let units = x / scale;
    if !(units >= 0.0 && units < (1u64 << layout.l) as f64) {
        return Err(Error::FixedPointRange { value: x, bits: layout.l });
    }
    let code = ((units * (1u64 << layout.k) as f64).floor() as u64).min(layout.max_code());
    Ok(FixedPointCode { layout, code, scale })
}

/// Like [`encode_fixed_point`] but values past the range become the all-ones code.
pub fn encode_saturating(x: f64, layout: FixedLayout, scale: f64) -> Result<FixedPointCode> {
    match encode_fixed_point(x, layout, scale) {
        Err(Error::FixedPointRange { .. }) if x > 0.0 => Ok(FixedPointCode {
            layout,
            code: layout.max_code(),
            scale,
        }),
        r => r,
    }
}

/// The threshold `2^j` (in units of `scale`): a single set bit at position `k + j`.
pub fn threshold_code(layout: FixedLayout, j: u32, scale: f64) -> Result<FixedPointCode> {
    if j >= layout.l {
        return Err(Error::InvalidParameter(format!("threshold bit {j} outside {} integer bits", layout.l)));
    }
    Ok(FixedPointCode {
        layout,
        code: 1u64 << (layout.k + j),
        scale,
    })
}

/// `0 < v < c` evaluated bit by bit: the bits of `v` at and above the set
/// bit of `c` are all zero, and `v` is not the all-zero register.
pub fn filter_mark(v: &FixedPointCode, c: &FixedPointCode) -> Result<bool> {
    if v.layout != c.layout || v.scale != c.scale {
        return Err(Error::LayoutMismatch(format!(
            "{:?}/{} vs {:?}/{}",
            v.layout, v.scale, c.layout, c.scale
        )));
    }
    let width = v.layout.width();
    if c.code.count_ones() != 1 || c.code.trailing_zeros() < v.layout.k || c.code.trailing_zeros() >= width {
        return Err(Error::InvalidParameter(format!("threshold code {:#b} is not 2^(k+j)", c.code)));
    }
    let pos = c.code.trailing_zeros();
    let high_clear = (pos..width).all(|i| !v.bit(i));
    let all_clear = (0..width).all(|i| !v.bit(i));
    Ok(high_clear && !all_clear)
}

/// Toffoli count of an `c`-controlled NOT with borrowed ancillas: `2c - 3`.
pub fn mcx_toffoli(controls: u32) -> u64 {
    if controls <= 1 {
        0
    } else {
        2 * u64::from(controls) - 3
    }
}

/// Filter gates: the high-bit test and the all-zero test are each computed
/// and uncomputed, plus one Toffoli to apply the phase.
pub fn filter_toffoli(layout: FixedLayout) -> u64 {
    2 * mcx_toffoli(layout.l) + 2 * mcx_toffoli(layout.width()) + 1
}
