use num_bigint::{BigInt, BigUint};
use serde_json::{Number, Value};

const SAFE: u64 = 1 << 53;

/// Integers beyond 2^53 become decimal strings.
pub fn big(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) if v.unsigned_abs() <= SAFE => Value::Number(v.into()),
        _ => Value::String(x.to_string()),
    }
}

pub fn ubig(x: &BigUint) -> Value {
    big(&BigInt::from(x.clone()))
}

pub fn uint(x: u64) -> Value {
    if x <= SAFE {
        Value::Number(x.into())
    } else {
        Value::String(x.to_string())
    }
}

pub fn float(x: f64) -> Value {
    Number::from_f64(x).map_or(Value::Null, Value::Number)
}

pub fn uints(xs: &[u64]) -> Value {
    Value::Array(xs.iter().map(|&x| uint(x)).collect())
}

pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_past_53_bits_become_strings() {
        assert_eq!(big(&BigInt::from(SAFE)), Value::from(SAFE));
        assert_eq!(big(&BigInt::from(SAFE + 1)), Value::String("9007199254740993".into()));
        assert_eq!(big(&-BigInt::from(SAFE + 1)), Value::String("-9007199254740993".into()));
        assert_eq!(uint(u64::MAX), Value::String(u64::MAX.to_string()));
        assert_eq!(float(f64::NAN), Value::Null);
    }
}
