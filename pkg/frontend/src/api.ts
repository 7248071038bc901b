/** Typed client for the comparison service.
 *
 * Every method maps a non-2xx response to an ApiError carrying the
 * server's error code, so screens can show one distinct message per
 * code.  The client computes nothing itself: percentages, bands,
 * matches and highlight classes all come from the server.
 */

export type BandValue =
  | "zero"
  | "under_fifteen"
  | "fifteen_to_fifty"
  | "over_fifty"
  | "identical";

export interface DocumentEntry {
  id: number;
  name: string;
  sentence_count: number;
  ingested_at: number;
}

export interface UploadResult {
  id: number;
  name: string;
  sentence_count: number;
}

export interface MatchCoord {
  para: number;
  sent: number;
}

export interface CompareReport {
  doc_a: number;
  doc_b: number;
  pct_a: string;
  pct_b: string;
  band_a: BandValue;
  band_b: BandValue;
  matches: { left: MatchCoord; right: MatchCoord }[];
  third_party: { side: "a" | "b"; para: number; sent: number; docs: number[] }[];
}

export class ApiError extends Error {
  readonly code: string;
  readonly status: number;

  constructor(code: string, message: string, status: number) {
    super(message);
    this.name = "ApiError";
    this.code = code;
    this.status = status;
  }
}

export const ERROR_MESSAGES: Record<string, string> = {
  empty_document: "The file contains no usable sentences.",
  invalid_encoding: "The file is not valid UTF-8 text.",
  missing_name: "Give the document a name.",
  payload_too_large: "The file exceeds the server's upload limit.",
  unknown_document: "That document no longer exists. Refresh the list.",
  storage_failure: "The server could not save the change. Try again.",
  invalid_request: "The request was malformed. Reload the page.",
};

export function describeError(err: unknown): string {
  if (err instanceof ApiError) {
    return ERROR_MESSAGES[err.code] ?? `Unexpected server error (${err.code}).`;
  }
  return "The server cannot be reached.";
}

async function fail(resp: Response): Promise<never> {
  let code = "invalid_request";
  let message = resp.statusText;
  try {
    const body = await resp.json();
    if (typeof body.code === "string") code = body.code;
    if (typeof body.message === "string") message = body.message;
  } catch {
    // non-JSON error body; keep the fallback code
  }
  throw new ApiError(code, message, resp.status);
}

export class Client {
  constructor(private readonly base: string = "") {}

  documentXmlUrl(id: number): string {
    return `${this.base}/api/documents/${id}/xml`;
  }

  async listDocuments(): Promise<DocumentEntry[]> {
    const resp = await fetch(`${this.base}/api/documents`);
    if (!resp.ok) return fail(resp);
    return resp.json();
  }

  async upload(file: Blob, name: string): Promise<UploadResult> {
    const resp = await fetch(
      `${this.base}/api/documents?name=${encodeURIComponent(name)}`,
      { method: "POST", body: file },
    );
    if (!resp.ok) return fail(resp);
    return resp.json();
  }

  async remove(id: number): Promise<void> {
    const resp = await fetch(`${this.base}/api/documents/${id}`, { method: "DELETE" });
    if (!resp.ok) return fail(resp);
  }

  async exportXml(id: number): Promise<string> {
    const resp = await fetch(this.documentXmlUrl(id));
    if (!resp.ok) return fail(resp);
    return resp.text();
  }

  async compare(a: number, b: number): Promise<CompareReport> {
    const resp = await fetch(`${this.base}/api/compare`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ a, b }),
    });
    if (!resp.ok) return fail(resp);
    return resp.json();
  }

  async compareHtml(a: number, b: number): Promise<string> {
    const resp = await fetch(`${this.base}/api/compare/${a}/${b}/html`);
    if (!resp.ok) return fail(resp);
    return resp.text();
  }
}
