//! Hand-constructed control-flow graphs, compared up to block numbering.

use super::CfgFixture;
use codelens_core::Language::{Java, JavaScript, Python};

pub const ALL: &[CfgFixture] = &[
    // Python
    CfgFixture {
        name: "py_straight_line",
        lang: Python,
        code: "a = 1\nb = 2\nprint(a + b)\n",
        graphs: &[("<module>", &["ENTRY -> a = 1 | b = 2 | print(a + b)", "a = 1 | b = 2 | print(a + b) -> EXIT"])],
    },
    CfgFixture {
        name: "py_if_else_in_function",
        lang: Python,
        code: "def f(x):\n    if x:\n        y = 1\n    else:\n        y = 2\n    return y\n",
        graphs: &[
            ("<module>", &["ENTRY -> def f(x)", "def f(x) -> EXIT"]),
            (
                "f",
                &[
                    "ENTRY -> ?x",
                    "?x -T-> y = 1",
                    "?x -F-> y = 2",
                    "y = 1 -> return y",
                    "y = 2 -> return y",
                    "return y -> EXIT",
                ],
            ),
        ],
    },
    CfgFixture {
        name: "py_minimal_function",
        lang: Python,
        code: "def f():\n    pass\n",
        graphs: &[("<module>", &["ENTRY -> def f()", "def f() -> EXIT"]), ("f", &["ENTRY -> pass", "pass -> EXIT"])],
    },
    CfgFixture {
        name: "py_while",
        lang: Python,
        code: "def f(c):\n    while c:\n        x = 1\n    return x\n",
        graphs: &[
            ("<module>", &["ENTRY -> def f(c)", "def f(c) -> EXIT"]),
            ("f", &["ENTRY -> ?c", "?c -T-> x = 1", "x = 1 -L-> ?c", "?c -F-> return x", "return x -> EXIT"]),
        ],
    },
    CfgFixture {
        name: "py_for_break_continue",
        lang: Python,
        code: "for i in xs:\n    if i < 0:\n        continue\n    if i > 9:\n        break\n    print(i)\ndone()\n",
        graphs: &[(
            "<module>",
            &[
                "ENTRY -> ?for i in xs",
                "?for i in xs -T-> ?i < 0",
                "?i < 0 -T-> continue",
                "continue -L-> ?for i in xs",
                "?i < 0 -F-> ?i > 9",
                "?i > 9 -T-> break",
                "break -> done()",
                "?i > 9 -F-> print(i)",
                "print(i) -L-> ?for i in xs",
                "?for i in xs -F-> done()",
                "done() -> EXIT",
            ],
        )],
    },
    CfgFixture {
        name: "py_dead_code_after_return",
        lang: Python,
        code: "def f(x):\n    return x\n    x = 2\n",
        graphs: &[
            ("<module>", &["ENTRY -> def f(x)", "def f(x) -> EXIT"]),
            ("f", &["ENTRY -> return x", "return x -> EXIT", "!x = 2 -> EXIT"]),
        ],
    },
    CfgFixture {
        name: "py_nested_loops",
        lang: Python,
        code: "for i in a:\n    for j in b:\n        s = i * j\n",
        graphs: &[(
            "<module>",
            &[
                "ENTRY -> ?for i in a",
                "?for i in a -T-> ?for j in b",
                "?for j in b -T-> s = i * j",
                "s = i * j -L-> ?for j in b",
                "?for j in b -F-> ?for i in a",
                "?for i in a -F-> EXIT",
            ],
        )],
    },
    CfgFixture {
        name: "py_if_without_else",
        lang: Python,
        code: "if a:\n    b()\nc()\n",
        graphs: &[("<module>", &["ENTRY -> ?a", "?a -T-> b()", "?a -F-> c()", "b() -> c()", "c() -> EXIT"])],
    },
    CfgFixture {
        name: "py_elif_chain",
        lang: Python,
        code: "if a:\n    x = 1\nelif b:\n    x = 2\nelse:\n    x = 3\n",
        graphs: &[(
            "<module>",
            &[
                "ENTRY -> ?a",
                "?a -T-> x = 1",
                "?a -F-> ?b",
                "?b -T-> x = 2",
                "?b -F-> x = 3",
                "x = 1 -> EXIT",
                "x = 2 -> EXIT",
                "x = 3 -> EXIT",
            ],
        )],
    },
    CfgFixture {
        name: "py_while_else",
        lang: Python,
        code: "while n > 0:\n    n -= 1\nelse:\n    print(\"done\")\n",
        graphs: &[(
            "<module>",
            &[
                "ENTRY -> ?n > 0",
                "?n > 0 -T-> n -= 1",
                "n -= 1 -L-> ?n > 0",
                "?n > 0 -F-> print(\"done\")",
                "print(\"done\") -> EXIT",
            ],
        )],
    },
    CfgFixture {
        name: "py_try_except",
        lang: Python,
        code: "try:\n    x = f()\nexcept ValueError:\n    x = 0\nprint(x)\n",
        graphs: &[(
            "<module>",
            &[
                "ENTRY -> try",
                "try -> x = f()",
                "try -> ~except ValueError | x = 0",
                "x = f() -> print(x)",
                "~except ValueError | x = 0 -> print(x)",
                "print(x) -> EXIT",
            ],
        )],
    },
    CfgFixture {
        name: "py_return_inside_loop",
        lang: Python,
        code: "def find(xs, t):\n    for x in xs:\n        if x == t:\n            return x\n    return None\n",
        graphs: &[
            ("<module>", &["ENTRY -> def find(xs, t)", "def find(xs, t) -> EXIT"]),
            (
                "find",
                &[
                    "ENTRY -> ?for x in xs",
                    "?for x in xs -T-> ?x == t",
                    "?x == t -T-> return x",
                    "return x -> EXIT",
                    "?x == t -F-> ?for x in xs",
                    "?for x in xs -F-> return None",
                    "return None -> EXIT",
                ],
            ),
        ],
    },
    CfgFixture {
        name: "py_match",
        lang: Python,
        code: "match c:\n    case 1:\n        a()\n    case _:\n        b()\n",
        graphs: &[(
            "<module>",
            &["ENTRY -> match c", "match c -> ?case 1", "?case 1 -T-> a()", "?case 1 -F-> b()", "a() -> EXIT", "b() -> EXIT"],
        )],
    },
    CfgFixture {
        name: "py_method_graph",
        lang: Python,
        code: "class A:\n    def m(self):\n        return 1\n",
        graphs: &[
            ("<module>", &["ENTRY -> class A", "class A -> EXIT"]),
            ("A.m", &["ENTRY -> return 1", "return 1 -> EXIT"]),
        ],
    },
    CfgFixture {
        name: "py_dead_code_after_break",
        lang: Python,
        code: "while True:\n    break\n    x = 1\ny = 2\n",
        graphs: &[(
            "<module>",
            &[
                "ENTRY -> ?True",
                "?True -T-> break",
                "break -> y = 2",
                "!x = 1 -L-> ?True",
                "?True -F-> y = 2",
                "y = 2 -> EXIT",
            ],
        )],
    },
    CfgFixture { name: "py_empty_module", lang: Python, code: "", graphs: &[("<module>", &["ENTRY -> EXIT"])] },
    // JavaScript
    CfgFixture {
        name: "js_straight_line",
        lang: JavaScript,
        code: "let a = 1;\nlet b = a;\n",
        graphs: &[("<module>", &["ENTRY -> let a = 1; | let b = a;", "let a = 1; | let b = a; -> EXIT"])],
    },
    CfgFixture {
        name: "js_if_else_in_function",
        lang: JavaScript,
        code: "function f(x) {\n  let y;\n  if (x) {\n    y = 1;\n  } else {\n    y = 2;\n  }\n  return y;\n}\n",
        graphs: &[
            ("<module>", &["ENTRY -> function f(x)", "function f(x) -> EXIT"]),
            (
                "f",
                &[
                    "ENTRY -> let y;",
                    "let y; -> ?x",
                    "?x -T-> y = 1;",
                    "?x -F-> y = 2;",
                    "y = 1; -> return y;",
                    "y = 2; -> return y;",
                    "return y; -> EXIT",
                ],
            ),
        ],
    },
    CfgFixture {
        name: "js_while",
        lang: JavaScript,
        code: "while (i < 3) {\n  i++;\n}\n",
        graphs: &[("<module>", &["ENTRY -> ?i < 3", "?i < 3 -T-> i++;", "i++; -L-> ?i < 3", "?i < 3 -F-> EXIT"])],
    },
    CfgFixture {
        name: "js_for",
        lang: JavaScript,
        code: "for (let i = 0; i < n; i++) {\n  s += i;\n}\nlog(s);\n",
        graphs: &[(
            "<module>",
            &[
                "ENTRY -> ?for (let i = 0; i < n; i++)",
                "?for (let i = 0; i < n; i++) -T-> s += i;",
                "s += i; -L-> ?for (let i = 0; i < n; i++)",
                "?for (let i = 0; i < n; i++) -F-> log(s);",
                "log(s); -> EXIT",
            ],
        )],
    },
    CfgFixture {
        name: "js_do_while",
        lang: JavaScript,
        code: "do {\n  i++;\n} while (i < 3);\nend();\n",
        graphs: &[(
            "<module>",
            &["ENTRY -> i++;", "i++; -> ?i < 3", "?i < 3 -T-> i++;", "?i < 3 -F-> end();", "end(); -> EXIT"],
        )],
    },
    CfgFixture {
        name: "js_switch_fallthrough",
        lang: JavaScript,
        code: "switch (k) {\n  case 1:\n    a();\n  case 2:\n    b();\n    break;\n  default:\n    c();\n}\nd();\n",
        graphs: &[(
            "<module>",
            &[
                "ENTRY -> switch (k)",
                "switch (k) -> ?case 1",
                "?case 1 -T-> a();",
                "?case 1 -F-> ?case 2",
                "?case 2 -T-> b(); | break;",
                "?case 2 -F-> c();",
                "a(); -> b(); | break;",
                "b(); | break; -> d();",
                "c(); -> d();",
                "d(); -> EXIT",
            ],
        )],
    },
    CfgFixture {
        name: "js_for_of_break_continue",
        lang: JavaScript,
        code: "for (const x of xs) {\n  if (x < 0) continue;\n  if (x > 9) break;\n  use(x);\n}\n",
        graphs: &[(
            "<module>",
            &[
                "ENTRY -> ?for (const x of xs)",
                "?for (const x of xs) -T-> ?x < 0",
                "?x < 0 -T-> continue;",
                "continue; -L-> ?for (const x of xs)",
                "?x < 0 -F-> ?x > 9",
                "?x > 9 -T-> break;",
                "break; -> EXIT",
                "?x > 9 -F-> use(x);",
                "use(x); -L-> ?for (const x of xs)",
                "?for (const x of xs) -F-> EXIT",
            ],
        )],
    },
    CfgFixture {
        name: "js_dead_code_after_return",
        lang: JavaScript,
        code: "function f() {\n  return 1;\n  dead();\n}\n",
        graphs: &[
            ("<module>", &["ENTRY -> function f()", "function f() -> EXIT"]),
            ("f", &["ENTRY -> return 1;", "return 1; -> EXIT", "!dead(); -> EXIT"]),
        ],
    },
    CfgFixture {
        name: "js_labeled_break_nested_loops",
        lang: JavaScript,
        code: "outer: for (const r of rows) {\n  for (const c of cols) {\n    if (c) break outer;\n  }\n}\n",
        graphs: &[(
            "<module>",
            &[
                "ENTRY -> ?for (const r of rows)",
                "?for (const r of rows) -T-> ?for (const c of cols)",
                "?for (const c of cols) -T-> ?c",
                "?c -T-> break outer;",
                "break outer; -> EXIT",
                "?c -F-> ?for (const c of cols)",
                "?for (const c of cols) -F-> ?for (const r of rows)",
                "?for (const r of rows) -F-> EXIT",
            ],
        )],
    },
    CfgFixture {
        name: "js_try_catch_finally",
        lang: JavaScript,
        code: "try {\n  a();\n} catch (e) {\n  b(e);\n} finally {\n  c();\n}\n",
        graphs: &[(
            "<module>",
            &[
                "ENTRY -> try",
                "try -> a();",
                "try -> ~catch (e) | b(e);",
                "a(); -> finally | c();",
                "~catch (e) | b(e); -> finally | c();",
                "finally | c(); -> EXIT",
            ],
        )],
    },
    CfgFixture {
        name: "js_arrow_graph",
        lang: JavaScript,
        code: "const f = (x) => x * 2;\n",
        graphs: &[
            ("<module>", &["ENTRY -> const f = (x) => x * 2;", "const f = (x) => x * 2; -> EXIT"]),
            ("f", &["ENTRY -> x * 2", "x * 2 -> EXIT"]),
        ],
    },
    CfgFixture {
        name: "js_class_method_graph",
        lang: JavaScript,
        code: "class A {\n  m() {\n    return 1;\n  }\n}\n",
        graphs: &[
            ("<module>", &["ENTRY -> class A", "class A -> EXIT"]),
            ("A.m", &["ENTRY -> return 1;", "return 1; -> EXIT"]),
        ],
    },
    CfgFixture {
        name: "js_return_inside_while",
        lang: JavaScript,
        code: "function g(n) {\n  while (n > 0) {\n    if (n === 5) return n;\n    n--;\n  }\n  return 0;\n}\n",
        graphs: &[
            ("<module>", &["ENTRY -> function g(n)", "function g(n) -> EXIT"]),
            (
                "g",
                &[
                    "ENTRY -> ?n > 0",
                    "?n > 0 -T-> ?n === 5",
                    "?n === 5 -T-> return n;",
                    "return n; -> EXIT",
                    "?n === 5 -F-> n--;",
                    "n--; -L-> ?n > 0",
                    "?n > 0 -F-> return 0;",
                    "return 0; -> EXIT",
                ],
            ),
        ],
    },
    CfgFixture {
        name: "js_throw",
        lang: JavaScript,
        code: "if (!ok) {\n  throw new Error(\"x\");\n}\ngo();\n",
        graphs: &[(
            "<module>",
            &[
                "ENTRY -> ?!ok",
                "?!ok -T-> throw new Error(\"x\");",
                "throw new Error(\"x\"); -> EXIT",
                "?!ok -F-> go();",
                "go(); -> EXIT",
            ],
        )],
    },
    CfgFixture { name: "js_empty_module", lang: JavaScript, code: "", graphs: &[("<module>", &["ENTRY -> EXIT"])] },
    CfgFixture {
        name: "js_else_if_chain",
        lang: JavaScript,
        code: "if (a) x = 1;\nelse if (b) x = 2;\nelse x = 3;\n",
        graphs: &[(
            "<module>",
            &[
                "ENTRY -> ?a",
                "?a -T-> x = 1;",
                "?a -F-> ?b",
                "?b -T-> x = 2;",
                "?b -F-> x = 3;",
                "x = 1; -> EXIT",
                "x = 2; -> EXIT",
                "x = 3; -> EXIT",
            ],
        )],
    },
    // Java
    CfgFixture {
        name: "java_straight_line",
        lang: Java,
        code: "int a = 1;\nint b = a;\n",
        graphs: &[("<module>", &["ENTRY -> int a = 1; | int b = a;", "int a = 1; | int b = a; -> EXIT"])],
    },
    CfgFixture {
        name: "java_if_else_in_method",
        lang: Java,
        code: "class C {\n    int f(boolean x) {\n        int y;\n        if (x) {\n            y = 1;\n        } else {\n            y = 2;\n        }\n        return y;\n    }\n}\n",
        graphs: &[
            ("<module>", &["ENTRY -> class C", "class C -> EXIT"]),
            (
                "C.f",
                &[
                    "ENTRY -> int y;",
                    "int y; -> ?x",
                    "?x -T-> y = 1;",
                    "?x -F-> y = 2;",
                    "y = 1; -> return y;",
                    "y = 2; -> return y;",
                    "return y; -> EXIT",
                ],
            ),
        ],
    },
    CfgFixture {
        name: "java_while",
        lang: Java,
        code: "while (i < 3) {\n    i++;\n}\n",
        graphs: &[("<module>", &["ENTRY -> ?i < 3", "?i < 3 -T-> i++;", "i++; -L-> ?i < 3", "?i < 3 -F-> EXIT"])],
    },
    CfgFixture {
        name: "java_for",
        lang: Java,
        code: "for (int i = 0; i < n; i++) {\n    s += i;\n}\n",
        graphs: &[(
            "<module>",
            &[
                "ENTRY -> ?for (int i = 0; i < n; i++)",
                "?for (int i = 0; i < n; i++) -T-> s += i;",
                "s += i; -L-> ?for (int i = 0; i < n; i++)",
                "?for (int i = 0; i < n; i++) -F-> EXIT",
            ],
        )],
    },
    CfgFixture {
        name: "java_enhanced_for_continue",
        lang: Java,
        code: "for (int x : xs) {\n    if (x < 0) continue;\n    sum += x;\n}\n",
        graphs: &[(
            "<module>",
            &[
                "ENTRY -> ?for (int x : xs)",
                "?for (int x : xs) -T-> ?x < 0",
                "?x < 0 -T-> continue;",
                "continue; -L-> ?for (int x : xs)",
                "?x < 0 -F-> sum += x;",
                "sum += x; -L-> ?for (int x : xs)",
                "?for (int x : xs) -F-> EXIT",
            ],
        )],
    },
    CfgFixture {
        name: "java_do_while",
        lang: Java,
        code: "do {\n    i++;\n} while (i < 3);\nend();\n",
        graphs: &[(
            "<module>",
            &["ENTRY -> i++;", "i++; -> ?i < 3", "?i < 3 -T-> i++;", "?i < 3 -F-> end();", "end(); -> EXIT"],
        )],
    },
    CfgFixture {
        name: "java_switch_fallthrough",
        lang: Java,
        code: "switch (k) {\n    case 1:\n        a();\n    case 2:\n        b();\n        break;\n    default:\n        c();\n}\nd();\n",
        graphs: &[(
            "<module>",
            &[
                "ENTRY -> switch (k)",
                "switch (k) -> ?case 1",
                "?case 1 -T-> a();",
                "?case 1 -F-> ?case 2",
                "?case 2 -T-> b(); | break;",
                "?case 2 -F-> c();",
                "a(); -> b(); | break;",
                "b(); | break; -> d();",
                "c(); -> d();",
                "d(); -> EXIT",
            ],
        )],
    },
    CfgFixture {
        name: "java_switch_rules",
        lang: Java,
        code: "switch (k) {\n    case 1 -> a();\n    default -> b();\n}\n",
        graphs: &[(
            "<module>",
            &["ENTRY -> switch (k)", "switch (k) -> ?case 1", "?case 1 -T-> a();", "?case 1 -F-> b();", "a(); -> EXIT", "b(); -> EXIT"],
        )],
    },
    CfgFixture {
        name: "java_labeled_break_nested_loops",
        lang: Java,
        code: "outer:\nfor (int i = 0; i < n; i++) {\n    for (int j = 0; j < n; j++) {\n        if (j == i) break outer;\n    }\n}\ndone();\n",
        graphs: &[(
            "<module>",
            &[
                "ENTRY -> ?for (int i = 0; i < n; i++)",
                "?for (int i = 0; i < n; i++) -T-> ?for (int j = 0; j < n; j++)",
                "?for (int j = 0; j < n; j++) -T-> ?j == i",
                "?j == i -T-> break outer;",
                "break outer; -> done();",
                "?j == i -F-> ?for (int j = 0; j < n; j++)",
                "?for (int j = 0; j < n; j++) -F-> ?for (int i = 0; i < n; i++)",
                "?for (int i = 0; i < n; i++) -F-> done();",
                "done(); -> EXIT",
            ],
        )],
    },
    CfgFixture {
        name: "java_try_catch_finally",
        lang: Java,
        code: "try {\n    a();\n} catch (Exception e) {\n    b();\n} finally {\n    c();\n}\n",
        graphs: &[(
            "<module>",
            &[
                "ENTRY -> try",
                "try -> a();",
                "try -> ~catch (Exception e) | b();",
                "a(); -> finally | c();",
                "~catch (Exception e) | b(); -> finally | c();",
                "finally | c(); -> EXIT",
            ],
        )],
    },
    CfgFixture {
        name: "java_dead_code_after_return",
        lang: Java,
        code: "class C {\n    void f() {\n        return;\n        g();\n    }\n}\n",
        graphs: &[
            ("<module>", &["ENTRY -> class C", "class C -> EXIT"]),
            ("C.f", &["ENTRY -> return;", "return; -> EXIT", "!g(); -> EXIT"]),
        ],
    },
    CfgFixture {
        name: "java_lambda_graph",
        lang: Java,
        code: "Runnable r = () -> go();\n",
        graphs: &[
            ("<module>", &["ENTRY -> Runnable r = () -> go();", "Runnable r = () -> go(); -> EXIT"]),
            ("<lambda>", &["ENTRY -> go()", "go() -> EXIT"]),
        ],
    },
    CfgFixture {
        name: "java_return_inside_while",
        lang: Java,
        code: "class C {\n    int g(int n) {\n        while (n > 0) {\n            if (n == 5) return n;\n            n--;\n        }\n        return 0;\n    }\n}\n",
        graphs: &[
            ("<module>", &["ENTRY -> class C", "class C -> EXIT"]),
            (
                "C.g",
                &[
                    "ENTRY -> ?n > 0",
                    "?n > 0 -T-> ?n == 5",
                    "?n == 5 -T-> return n;",
                    "return n; -> EXIT",
                    "?n == 5 -F-> n--;",
                    "n--; -L-> ?n > 0",
                    "?n > 0 -F-> return 0;",
                    "return 0; -> EXIT",
                ],
            ),
        ],
    },
    CfgFixture {
        name: "java_if_without_else",
        lang: Java,
        code: "if (a) {\n    b();\n}\nc();\n",
        graphs: &[("<module>", &["ENTRY -> ?a", "?a -T-> b();", "?a -F-> c();", "b(); -> c();", "c(); -> EXIT"])],
    },
    CfgFixture {
        name: "java_throw",
        lang: Java,
        code: "class C {\n    void f(int x) {\n        if (x < 0) throw new IllegalArgumentException();\n        use(x);\n    }\n}\n",
        graphs: &[
            ("<module>", &["ENTRY -> class C", "class C -> EXIT"]),
            (
                "C.f",
                &[
                    "ENTRY -> ?x < 0",
                    "?x < 0 -T-> throw new IllegalArgumentException();",
                    "throw new IllegalArgumentException(); -> EXIT",
                    "?x < 0 -F-> use(x);",
                    "use(x); -> EXIT",
                ],
            ),
        ],
    },
    CfgFixture {
        name: "java_abstract_method_has_no_graph",
        lang: Java,
        code: "interface I {\n    void m();\n}\n",
        graphs: &[("<module>", &["ENTRY -> interface I", "interface I -> EXIT"])],
    },
];
