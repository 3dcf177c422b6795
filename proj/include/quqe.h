/* C interface to the quqe kernel: string-in/string-out over opaque handles.
 *
 * Status codes, shared with the CLI exit codes:
 *   0  success / True / tautologous / Defined / proof checks
 *   1  failure / False / Undefined / proof rejected
 *   2  Unknown / Stuck / fuel exhausted / not propositional
 *   3  usage or parse error
 *
 * Every char** output parameter receives a malloc'd string that the caller
 * must release with quqe_string_free; it is set to NULL when unused.
 */
#ifndef QUQE_H
#define QUQE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct quqe_theory quqe_theory;

/* Theories. quqe_theory_create yields the empty evaluation-free theory. */
int quqe_theory_create(quqe_theory** out, char** err);
int quqe_theory_load_file(const char* path, quqe_theory** out, char** err);
int quqe_theory_load_text(const char* text, quqe_theory** out, char** err);
void quqe_theory_free(quqe_theory* th);
void quqe_string_free(char* s);

/* Default normalization fuel for this handle (initially 100000). */
void quqe_set_fuel(quqe_theory* th, long fuel);

/* When nonzero, printed outputs use the raw kernel structure instead of the
 * abbreviated surface notation. */
void quqe_set_expand_sugar(quqe_theory* th, int expand);

/* Wff operations. Inputs are surface syntax; outputs are printed wffs. */
int quqe_check_wff(const quqe_theory* th, const char* wff, char** out, char** err);
int quqe_typecheck(const quqe_theory* th, const char* wff, char** out, char** err);
int quqe_normalize(const quqe_theory* th, const char* wff, char** out, char** err);
int quqe_quote(const quqe_theory* th, const char* wff, char** out, char** err);
int quqe_eval(const quqe_theory* th, const char* wff, char** out, char** err);
int quqe_sub(const quqe_theory* th, const char* a, const char* x, const char* d,
             char** out, char** err);
int quqe_cleanse(const quqe_theory* th, const char* d, char** out, char** err);
int quqe_not_free_in(const quqe_theory* th, const char* x, const char* d, char** err);
int quqe_taut(const quqe_theory* th, const char* wff, char** err);

/* Proof checking. *out receives a JSON report:
 * {"ok":bool,"lines":n,"primitive_steps":n,
 *  "diagnostics":[{"line":n,"ok":bool,"class":s,"message":s},...]} */
int quqe_check_proof_text(const quqe_theory* th, const char* text,
                          char** out, char** err);
int quqe_check_proof_file(const quqe_theory* th, const char* path,
                          char** out, char** err);

#ifdef __cplusplus
}
#endif

#endif /* QUQE_H */
