use super::{InputDocument, InputError};

/// Built-in fixtures: name, description, document text.
const CATALOG: &[(&str, &str, &str)] = &[
    ("abelian2", "two-dimensional abelian algebra, zero structure", r#"{"dim": 2, "mu": []}"#),
    (
        "heisenberg3",
        "Heisenberg algebra [x,y] = z, exact structure from r = x^y",
        r#"{"dim": 3, "basis": ["x", "y", "z"], "mu": [[1, 2, 3, "1"]], "r": [[1, 2, "1"]]}"#,
    ),
    (
        "sl2-bialgebra",
        "sl2 with the standard cobracket and phi = 0",
        r#"{"dim": 3, "basis": ["h", "e", "f"],
            "mu": [[1, 2, 2, "2"], [1, 3, 3, "-2"], [2, 3, 1, "1"]],
            "gamma": [[1, 2, 2, "1"], [1, 3, 3, "1"]]}"#,
    ),
    (
        "sl2-exact-r",
        "sl2 with the exact structure of r = e^f",
        r#"{"dim": 3, "basis": ["h", "e", "f"],
            "mu": [[1, 2, 2, "2"], [1, 3, 3, "-2"], [2, 3, 1, "1"]],
            "r": [[2, 3, "1"]]}"#,
    ),
    (
        "sl2-quasitriangular",
        "sl2 with r = 3 e(x)f + f(x)e + h(x)h: a = e^f, s twice the Casimir",
        r#"{"dim": 3, "basis": ["h", "e", "f"],
            "mu": [[1, 2, 2, "2"], [1, 3, 3, "-2"], [2, 3, 1, "1"]],
            "r_tensor": [[2, 3, "3"], [3, 2, "1"], [1, 1, "1"]]}"#,
    ),
    (
        "aff1r-exact",
        "aff(1) + R with [x,y] = y, exact structure from r = x^y + x^z",
        r#"{"dim": 3, "basis": ["x", "y", "z"], "mu": [[1, 2, 2, "1"]], "r": [[1, 2, "1"], [1, 3, "1"]]}"#,
    ),
];

pub fn example_names() -> impl Iterator<Item = &'static str> {
    CATALOG.iter().map(|(n, _, _)| *n)
}

pub fn example_description(name: &str) -> Option<&'static str> {
    CATALOG.iter().find(|(n, _, _)| *n == name).map(|(_, d, _)| *d)
}

pub fn example_catalog(name: &str) -> Result<InputDocument, InputError> {
    let (_, _, text) =
        CATALOG.iter().find(|(n, _, _)| *n == name).ok_or_else(|| InputError::UnknownExample(name.to_string()))?;
    InputDocument::parse(text)
}
