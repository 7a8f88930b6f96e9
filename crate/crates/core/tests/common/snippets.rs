//! Deterministic generator of small, varied programs: templates filled with
//! identifiers, numbers and string literals (some of them non-ASCII).

use codelens_core::Language;

const NAMES: &[&str] = &["x", "count", "total", "item", "node", "value", "acc", "ptr", "größe", "idx", "result", "tmp"];
const NUMBERS: &[&str] = &["0", "1", "42", "3.5", "0x1F", "1000000", "7"];
const STRINGS: &[&str] = &["hello", "naïve café", "tab\there", "日本語", "a b  c", "emoji 🚀", ""];

const PYTHON: &[&str] = &[
    "{a} = {n}\n{b} = {a} * 2\nprint({b})\n",
    "def f({a}, {b}={n}):\n    if {a} > {b}:\n        return {a}\n    return {b}\n",
    "for {a} in range({n}):\n    {b} = {a} + {b}\n",
    "while {a} < {n}:\n    {a} += 1\nelse:\n    print(\"{s}\")\n",
    "class K:\n    def m(self, {a}):\n        self.{b} = {a}\n        return self.{b}\n",
    "{a} = [{b} * 2 for {b} in data if {b}]\n# comment with {s}\n",
    "try:\n    {a} = int(\"{s}\")\nexcept ValueError as err:\n    {a} = {n}\nfinally:\n    done()\n",
    "with open(\"{s}\") as {a}:\n    {b} = {a}.read()\n",
    "{a}, {b} = {b}, {a}\nlambda {a}: {a} + {n}\n",
    "match {a}:\n    case {n}:\n        {b} = 1\n    case _:\n        {b} = 2\n",
];

const JAVASCRIPT: &[&str] = &[
    "let {a} = {n};\nconst {b} = {a} * 2;\nconsole.log({b});\n",
    "function f({a}, {b} = {n}) {\n  if ({a} > {b}) {\n    return {a};\n  }\n  return {b};\n}\n",
    "for (let {a} = 0; {a} < {n}; {a}++) {\n  {b} += {a};\n}\n",
    "while ({a} < {n}) {\n  {a}++;\n}\n// {s}\n",
    "class K {\n  m({a}) {\n    this.{b} = {a};\n    return this.{b};\n  }\n}\n",
    "const {a} = data.filter(({b}) => {b} > {n}).map(({b}) => `{s}${b}`);\n",
    "try {\n  {a} = JSON.parse(\"{s}\");\n} catch (err) {\n  {a} = {n};\n} finally {\n  done();\n}\n",
    "switch ({a}) {\n  case {n}:\n    {b} = 1;\n    break;\n  default:\n    {b} = 2;\n}\n",
    "const {{ {a}, {b} }} = obj;\nlet [p, q] = [{a}, {b}];\n",
    "do {\n  {a} -= 1;\n} while ({a} > {n});\n",
];

const JAVA: &[&str] = &[
    "int {a} = {n};\nint {b} = {a} * 2;\nSystem.out.println({b});\n",
    "class K {\n    int f(int {a}, int {b}) {\n        if ({a} > {b}) {\n            return {a};\n        }\n        return {b};\n    }\n}\n",
    "for (int {a} = 0; {a} < {n}; {a}++) {\n    {b} += {a};\n}\n",
    "while ({a} < {n}) {\n    {a}++;\n}\n// {s}\n",
    "class K {\n    int {b};\n    void m(int {a}) {\n        this.{b} = {a};\n    }\n}\n",
    "String {a} = \"{s}\";\nfor (char c : {a}.toCharArray()) {\n    {b} += c;\n}\n",
    "try {\n    {a} = Integer.parseInt(\"{s}\");\n} catch (NumberFormatException err) {\n    {a} = {n};\n} finally {\n    done();\n}\n",
    "switch ({a}) {\n    case 1:\n        {b} = 1;\n        break;\n    default:\n        {b} = 2;\n}\n",
    "Runnable r = () -> {{\n    int {a} = {n};\n}};\n/* {s} */\n",
    "do {\n    {a} -= 1;\n} while ({a} > {n});\n",
];

fn fill(template: &str, a: &str, b: &str, n: &str, s: &str) -> String {
    template
        .replace("{{", "\u{0}")
        .replace("}}", "\u{1}")
        .replace("{a}", a)
        .replace("{b}", b)
        .replace("{n}", n)
        .replace("{s}", s)
        .replace('\u{0}', "{")
        .replace('\u{1}', "}")
}

/// 120 snippets for `lang`, identical on every call.
pub fn generate(lang: Language) -> Vec<String> {
    let templates = match lang {
        Language::Python => PYTHON,
        Language::JavaScript => JAVASCRIPT,
        Language::Java => JAVA,
    };
    (0..120)
        .map(|i| {
            let t = templates[i % templates.len()];
            let mut a = NAMES[i % NAMES.len()];
            let mut b = NAMES[(i * 7 + 3) % NAMES.len()];
            // Java and JavaScript identifiers may not contain `ö` in every
            // position the templates use; keep them plain for those.
            if lang != Language::Python {
                if a == "größe" {
                    a = "size";
                }
                if b == "größe" {
                    b = "size";
                }
            }
            if a == b {
                b = "other";
            }
            fill(t, a, b, NUMBERS[i % NUMBERS.len()], STRINGS[(i / 3) % STRINGS.len()])
        })
        .collect()
}
