/// Bell numbers as row sums of Stirling numbers of the second kind,
/// `S(n, k) = k S(n-1, k) + S(n-1, k-1)`.
pub fn bell_by_stirling(n: usize) -> u64 {
    let mut s = vec![vec![0u64; n + 1]; n + 1];
    s[0][0] = 1;
    for i in 1..=n {
        for k in 1..=i {
            s[i][k] = k as u64 * s[i - 1][k] + s[i - 1][k - 1];
        }
    }
    s[n].iter().sum()
}
