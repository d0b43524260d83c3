//! Plain-text rendering of a JSON document: `key = value` for scalars and short
//! scalar lists, indented blocks for everything else.

use serde_json::Value;

pub fn text(v: &Value) -> String {
    let mut out = String::new();
    block(v, 0, &mut out);
    out.truncate(out.trim_end().len());
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(xs) if xs.iter().all(|x| !x.is_array() && !x.is_object()) => {
            Some(format!("[{}]", xs.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        // Externally tagged enums such as {"finite": 2}.
        Value::Object(m) if m.len() == 1 => {
            let (k, x) = m.iter().next().expect("one entry");
            if x.is_array() || x.is_object() {
                None
            } else {
                Some(format!("{k}({})", scalar(x)?))
            }
        }
        Value::Object(m) if m.len() <= 4 && m.values().all(|x| !x.is_array() && !x.is_object()) => Some(
            m.iter()
                .map(|(k, x)| format!("{k}: {}", scalar(x).unwrap_or_default()))
                .collect::<Vec<_>>()
                .join(", "),
        ),
        _ => None,
    }
}

fn block(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) if s.contains('\n') => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for line in s.lines() {
                            out.push_str(&format!("{pad}  {line}\n"));
                        }
                    }
                    Some(s) => out.push_str(&format!("{pad}{k} = {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        block(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(xs) => {
            for x in xs {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        block(x, depth + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}
