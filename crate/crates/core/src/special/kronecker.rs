/// Kronecker symbol `(d / n)` for `n > 0`.
///
/// The power of two in `n` is stripped first using `(d/2)`; the odd part is
/// handled by the Jacobi recursion with quadratic reciprocity.
pub fn kronecker_symbol(d: i64, n: u64) -> i8 {
    assert!(n > 0, "kronecker_symbol needs n > 0");
    let mut n = n;
    let mut result: i8 = 1;
    let twos = n.trailing_zeros();
    if twos > 0 {
        if d % 2 == 0 {
            return 0;
        }
        n >>= twos;
        let r8 = d.rem_euclid(8);
        if twos % 2 == 1 && (r8 == 3 || r8 == 5) {
            result = -result;
        }
    }
    if n == 1 {
        return result;
    }
    result * jacobi(d.rem_euclid(n as i64) as u64, n)
}

// Jacobi symbol (a / n) for odd n > 0, 0 <= a.
fn jacobi(mut a: u64, mut n: u64) -> i8 {
    debug_assert!(n % 2 == 1);
    let mut result: i8 = 1;
    a %= n;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n % 8;
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conductor_four() {
        assert_eq!(kronecker_symbol(-4, 1), 1);
        assert_eq!(kronecker_symbol(-4, 2), 0);
        assert_eq!(kronecker_symbol(-4, 3), -1);
        assert_eq!(kronecker_symbol(-4, 5), 1);
    }

    #[test]
    fn conductor_eight_and_three() {
        let want8 = [1, 0, 1, 0, -1, 0, -1, 0];
        for (n, w) in (1..=8).zip(want8) {
            assert_eq!(kronecker_symbol(-8, n), w, "n = {n}");
        }
        let want3 = [1, -1, 0];
        for (n, w) in (1..=3).zip(want3) {
            assert_eq!(kronecker_symbol(-3, n), w, "n = {n}");
        }
    }

    // Brute-force Legendre symbol via Euler's criterion.
    fn legendre(a: i64, p: u64) -> i8 {
        let a = a.rem_euclid(p as i64) as u64;
        if a == 0 {
            return 0;
        }
        let mut r = 1u64;
        let mut b = a;
        let mut e = (p - 1) / 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        if r == 1 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn agrees_with_euler_criterion_at_odd_primes() {
        for &d in &[-3i64, -4, -7, -8, -11, -19, -43, -67, -163] {
            for &p in &[3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 163] {
                assert_eq!(kronecker_symbol(d, p), legendre(d, p), "d={d} p={p}");
            }
        }
    }

    #[test]
    fn multiplicative_and_periodic() {
        for &d in &[-3i64, -4, -7, -8, -11, -19, -43, -67, -163] {
            let m = d.unsigned_abs();
            for a in 1..60u64 {
                assert_eq!(kronecker_symbol(d, a), kronecker_symbol(d, a + m));
                for b in 1..20u64 {
                    assert_eq!(
                        kronecker_symbol(d, a * b),
                        kronecker_symbol(d, a) * kronecker_symbol(d, b)
                    );
                }
            }
        }
    }
}
