/** Typed client for the comparison service.
 *
 * Every method maps a non-2xx response to an ApiError carrying the
 * server's error code, so screens can show one distinct message per
 * code.  The client computes nothing itself: percentages, bands,
 * matches and highlight classes all come from the server.
 */
export class ApiError extends Error {
    constructor(code, message, status) {
        super(message);
        this.name = "ApiError";
        this.code = code;
        this.status = status;
    }
}
export const ERROR_MESSAGES = {
    empty_document: "The file contains no usable sentences.",
    invalid_encoding: "The file is not valid UTF-8 text.",
    missing_name: "Give the document a name.",
    payload_too_large: "The file exceeds the server's upload limit.",
    unknown_document: "That document no longer exists. Refresh the list.",
    storage_failure: "The server could not save the change. Try again.",
    invalid_request: "The request was malformed. Reload the page.",
};
export function describeError(err) {
    if (err instanceof ApiError) {
        return ERROR_MESSAGES[err.code] ?? `Unexpected server error (${err.code}).`;
    }
    return "The server cannot be reached.";
}
async function fail(resp) {
    let code = "invalid_request";
    let message = resp.statusText;
    try {
        const body = await resp.json();
        if (typeof body.code === "string")
            code = body.code;
        if (typeof body.message === "string")
            message = body.message;
    }
    catch {
        // non-JSON error body; keep the fallback code
    }
    throw new ApiError(code, message, resp.status);
}
export class Client {
    constructor(base = "") {
        this.base = base;
    }
    documentXmlUrl(id) {
        return `${this.base}/api/documents/${id}/xml`;
    }
    async listDocuments() {
        const resp = await fetch(`${this.base}/api/documents`);
        if (!resp.ok)
            return fail(resp);
        return resp.json();
    }
    async upload(file, name) {
        const resp = await fetch(`${this.base}/api/documents?name=${encodeURIComponent(name)}`, { method: "POST", body: file });
        if (!resp.ok)
            return fail(resp);
        return resp.json();
    }
    async remove(id) {
        const resp = await fetch(`${this.base}/api/documents/${id}`, { method: "DELETE" });
        if (!resp.ok)
            return fail(resp);
    }
    async exportXml(id) {
        const resp = await fetch(this.documentXmlUrl(id));
        if (!resp.ok)
            return fail(resp);
        return resp.text();
    }
    async compare(a, b) {
        const resp = await fetch(`${this.base}/api/compare`, {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify({ a, b }),
        });
        if (!resp.ok)
            return fail(resp);
        return resp.json();
    }
    async compareHtml(a, b) {
        const resp = await fetch(`${this.base}/api/compare/${a}/${b}/html`);
        if (!resp.ok)
            return fail(resp);
        return resp.text();
    }
}
