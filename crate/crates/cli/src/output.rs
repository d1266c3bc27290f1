use std::collections::BTreeMap;

use qhopf::report::Check;
use qhopf::Report;
use serde::Serialize;
use serde_json::Value;

/// Machine-readable result of one invocation.
#[derive(Serialize)]
pub struct Output {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub results: Vec<Value>,
    pub passed: usize,
    pub failed: usize,
    #[serde(skip)]
    text: Vec<String>,
    #[serde(skip)]
    unicode: bool,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    title: &'a str,
    passed: usize,
    failed: usize,
    checks: &'a [Check],
}

impl Output {
    pub fn new(command: &str, unicode: bool) -> Self {
        Output {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            results: Vec::new(),
            passed: 0,
            failed: 0,
            text: Vec::new(),
            unicode,
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    /// A named value; `text` is algebra output and gets prettified under `--unicode`.
    pub fn value(&mut self, name: &str, text: &str) {
        let shown = if self.unicode { prettify(text) } else { text.to_string() };
        self.results.push(serde_json::json!({ "name": name, "value": shown }));
        self.text.push(if name.is_empty() { shown } else { format!("{name}: {shown}") });
    }

    pub fn report(&mut self, report: &Report) {
        self.passed += report.pass_count();
        self.failed += report.fail_count();
        let json = ReportJson {
            title: &report.title,
            passed: report.pass_count(),
            failed: report.fail_count(),
            checks: &report.checks,
        };
        self.results.push(serde_json::to_value(json).expect("report serializes"));
        self.text.push(report.to_string());
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            serde_json::to_string_pretty(self).expect("output serializes")
        } else {
            let mut out = self.text.join("\n");
            if self.passed + self.failed > 0 {
                let verdict = if self.failed == 0 { "PASS" } else { "FAIL" };
                out.push_str(&format!("\n{verdict}: {} passed, {} failed", self.passed, self.failed));
            }
            out
        }
    }
}

fn superscript(c: char) -> char {
    match c {
        '0' => '⁰',
        '1' => '¹',
        '2' => '²',
        '3' => '³',
        '4' => '⁴',
        '5' => '⁵',
        '6' => '⁶',
        '7' => '⁷',
        '8' => '⁸',
        '9' => '⁹',
        '-' => '⁻',
        other => other,
    }
}

/// Greek names, superscript exponents, `·` and `⊗`; identifiers are replaced
/// only as whole tokens.
pub fn prettify(text: &str) -> String {
    let mut out = String::new();
    let chars: Vec<char> = text.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        if c.is_alphabetic() {
            let start = k;
            while k < chars.len() && (chars[k].is_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            let word: String = chars[start..k].iter().collect();
            out.push_str(match word.as_str() {
                "mu" => "μ",
                "alpha" => "α",
                "beta" => "β",
                "gamma" => "γ",
                _ => &word,
            });
            continue;
        }
        match c {
            '^' => {
                k += 1;
                if chars.get(k) == Some(&'-') {
                    out.push(superscript('-'));
                    k += 1;
                }
                while k < chars.len() && chars[k].is_ascii_digit() {
                    out.push(superscript(chars[k]));
                    k += 1;
                }
                continue;
            }
            '*' => out.push('·'),
            '@' => out.push('⊗'),
            _ => out.push(c),
        }
        k += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pretty_forms() {
        assert_eq!(prettify("-2*a*v + x*v"), "-2·a·v + x·v");
        assert_eq!(prettify("1@mu + mu^2@v"), "1⊗μ + μ²⊗v");
        assert_eq!(prettify("a^-1 - 1/2*alpha^12*E"), "a⁻¹ - 1/2·α¹²·E");
        assert_eq!(prettify("commute"), "commute");
    }
}
