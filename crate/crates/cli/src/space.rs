//! Text forms of flag spaces and weights for the `bott` subcommand.

use theta_core::bott::FlagSpace;

/// Parse `P3`, `Grass(2,4)`, `Flag(1,2;4)`, `IGrass(2,10)`, or a product
/// of these joined by `x` or `×`.
pub fn parse_space(text: &str) -> Result<FlagSpace, String> {
    let factors: Vec<&str> = text.split(['x', '×']).map(str::trim).collect();
    let parsed = factors.iter().map(|f| parse_factor(f)).collect::<Result<Vec<_>, _>>()?;
    if parsed.len() == 1 {
        return Ok(parsed.into_iter().next().expect("one factor"));
    }
    FlagSpace::product(&parsed).map_err(|e| e.to_string())
}

fn numbers(s: &str) -> Result<Vec<usize>, String> {
    s.split(',').map(|n| n.trim().parse::<usize>().map_err(|_| format!("bad number `{n}`"))).collect()
}

fn parse_factor(text: &str) -> Result<FlagSpace, String> {
    let bad = || format!("cannot read flag space `{text}`");
    if let Some(n) = text.strip_prefix('P') {
        let n: usize = n.parse().map_err(|_| bad())?;
        return FlagSpace::projective(n).map_err(|e| e.to_string());
    }
    let open = text.find('(').ok_or_else(bad)?;
    let inner = text[open + 1..].strip_suffix(')').ok_or_else(bad)?;
    let r = match &text[..open] {
        "Grass" => match numbers(inner)?.as_slice() {
            &[k, n] => FlagSpace::grassmannian(k, n),
            _ => return Err(bad()),
        },
        "IGrass" => match numbers(inner)?.as_slice() {
            &[k, m] if m % 2 == 0 => FlagSpace::isotropic_grassmannian(k, m / 2),
            _ => return Err(bad()),
        },
        "Flag" => {
            let (dims, n) = inner.split_once(';').ok_or_else(bad)?;
            let n: usize = n.trim().parse().map_err(|_| bad())?;
            let mut dims = numbers(dims)?;
            dims.push(n);
            let mut prev = 0;
            let mut blocks = Vec::new();
            for d in dims {
                if d <= prev {
                    return Err(format!("flag dimensions must increase in `{text}`"));
                }
                blocks.push(d - prev);
                prev = d;
            }
            FlagSpace::flag(&blocks)
        }
        _ => return Err(bad()),
    };
    r.map_err(|e| e.to_string())
}

/// Comma-separated coordinates, integers or halves (`-1/2`), doubled.
pub fn parse_doubled(text: &str) -> Result<Vec<i64>, String> {
    text.split(',')
        .map(|t| {
            let t = t.trim();
            let bad = || format!("bad coordinate `{t}`");
            match t.split_once('/') {
                Some((n, "2")) => n.trim().parse::<i64>().map_err(|_| bad()),
                Some(_) => Err(bad()),
                None => t.parse::<i64>().map(|x| 2 * x).map_err(|_| bad()),
            }
        })
        .collect()
}

/// Inverse of [`parse_doubled`].
pub fn show_halves(doubled: &[i64]) -> String {
    let parts: Vec<String> = doubled
        .iter()
        .map(|&x| if x % 2 == 0 { (x / 2).to_string() } else { format!("{x}/2") })
        .collect();
    parts.join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spaces_parse() {
        assert_eq!(parse_space("P3").unwrap().dim(), 3);
        assert_eq!(parse_space("Grass(2,4)").unwrap().dim(), 4);
        assert_eq!(parse_space("Flag(1,2;4)").unwrap().dim(), 5);
        assert_eq!(parse_space("IGrass(5,10)").unwrap().dim(), 10);
        assert_eq!(parse_space("P1 x Grass(2,4)").unwrap().dim(), 5);
        assert!(parse_space("Flag(2,1;4)").is_err());
        assert!(parse_space("Q3").is_err());
    }

    #[test]
    fn halves_round_trip() {
        let w = parse_doubled("1, -1/2, 0").unwrap();
        assert_eq!(w, vec![2, -1, 0]);
        assert_eq!(show_halves(&w), "1,-1/2,0");
    }
}
