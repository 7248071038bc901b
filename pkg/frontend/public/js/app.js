/** Screen wiring for the three views: upload, document list, compare.
 *
 * All state lives on the App instance; the DOM is re-rendered from the
 * last server response.  Concurrent requests are allowed, and each
 * render path keeps a sequence number so a response that arrives after
 * a newer request has been issued is dropped instead of overwriting
 * fresher data.
 */
import { Client, describeError } from "./api.js";
import { badgeFor } from "./badges.js";
function mustFind(doc, id) {
    const el = doc.getElementById(id);
    if (!el)
        throw new Error(`markup is missing #${id}`);
    return el;
}
export function stripExtension(filename) {
    const dot = filename.lastIndexOf(".");
    return dot > 0 ? filename.slice(0, dot) : filename;
}
export class App {
    constructor(doc, options = {}) {
        this.documents = [];
        this.docsSeq = 0;
        this.compareSeq = 0;
        this.doc = doc;
        this.client = options.client ?? new Client();
        this.confirmFn =
            options.confirmFn ?? ((message) => doc.defaultView?.confirm(message) ?? true);
        this.uploadForm = mustFind(doc, "upload-form");
        this.uploadFile = mustFind(doc, "upload-file");
        this.uploadName = mustFind(doc, "upload-name");
        this.uploadStatus = mustFind(doc, "upload-status");
        this.docTableBody = mustFind(doc, "doc-rows");
        this.documentsStatus = mustFind(doc, "documents-status");
        this.compareForm = mustFind(doc, "compare-form");
        this.selectA = mustFind(doc, "select-a");
        this.selectB = mustFind(doc, "select-b");
        this.compareStatus = mustFind(doc, "compare-status");
        this.resultEl = mustFind(doc, "compare-result");
        this.summaryEl = mustFind(doc, "compare-summary");
        this.docsEl = mustFind(doc, "compare-docs");
        this.provenanceEl = mustFind(doc, "compare-provenance");
        this.uploadForm.addEventListener("submit", (ev) => void this.handleUpload(ev));
        this.compareForm.addEventListener("submit", (ev) => void this.handleCompare(ev));
        for (const button of doc.querySelectorAll("nav button[data-screen]")) {
            button.addEventListener("click", () => this.showScreen(button.dataset.screen ?? ""));
        }
        this.ready = this.refreshDocuments();
    }
    showScreen(name) {
        for (const section of this.doc.querySelectorAll("section.screen")) {
            section.hidden = section.id !== `screen-${name}`;
        }
        for (const button of this.doc.querySelectorAll("nav button[data-screen]")) {
            button.classList.toggle("active", button.dataset.screen === name);
        }
        if (name === "documents" || name === "compare") {
            void this.refreshDocuments();
        }
    }
    async refreshDocuments() {
        const seq = ++this.docsSeq;
        try {
            const docs = await this.client.listDocuments();
            if (seq !== this.docsSeq)
                return;
            this.documents = docs;
            this.renderTable();
            this.renderSelects();
            this.documentsStatus.hidden = true;
        }
        catch (err) {
            if (seq !== this.docsSeq)
                return;
            this.setStatus(this.documentsStatus, describeError(err), true);
        }
    }
    async handleUpload(ev) {
        ev.preventDefault();
        const file = this.uploadFile.files?.[0];
        if (!file) {
            this.setStatus(this.uploadStatus, "Choose a file first.", true);
            return;
        }
        const name = this.uploadName.value.trim() || stripExtension(file.name);
        if (this.documents.some((d) => d.name === name)) {
            const replace = this.confirmFn(`A document named "${name}" already exists. Replace it?`);
            if (!replace) {
                this.setStatus(this.uploadStatus, "Upload cancelled.", false);
                return;
            }
        }
        try {
            const result = await this.client.upload(file, name);
            this.setStatus(this.uploadStatus, `Uploaded ${result.name} (${result.sentence_count} sentences).`, false);
            this.uploadForm.reset();
            await this.refreshDocuments();
        }
        catch (err) {
            this.setStatus(this.uploadStatus, describeError(err), true);
        }
    }
    async handleCompare(ev) {
        ev.preventDefault();
        const a = Number(this.selectA.value);
        const b = Number(this.selectB.value);
        if (!a || !b) {
            this.setStatus(this.compareStatus, "Pick two documents.", true);
            return;
        }
        const seq = ++this.compareSeq;
        this.setStatus(this.compareStatus, "Comparing...", false);
        try {
            const [report, page] = await Promise.all([
                this.client.compare(a, b),
                this.client.compareHtml(a, b),
            ]);
            if (seq !== this.compareSeq)
                return;
            this.renderComparison(report, page);
            this.compareStatus.hidden = true;
        }
        catch (err) {
            if (seq !== this.compareSeq)
                return;
            this.resultEl.hidden = true;
            this.setStatus(this.compareStatus, describeError(err), true);
        }
    }
    renderTable() {
        this.docTableBody.innerHTML = "";
        for (const entry of this.documents) {
            const row = this.doc.createElement("tr");
            const nameCell = this.doc.createElement("td");
            nameCell.textContent = entry.name;
            const countCell = this.doc.createElement("td");
            countCell.textContent = String(entry.sentence_count);
            const dateCell = this.doc.createElement("td");
            dateCell.textContent = new Date(entry.ingested_at * 1000)
                .toISOString()
                .slice(0, 10);
            const actionCell = this.doc.createElement("td");
            const xmlLink = this.doc.createElement("a");
            xmlLink.textContent = "XML";
            xmlLink.className = "action-xml";
            xmlLink.href = this.client.documentXmlUrl(entry.id);
            xmlLink.setAttribute("download", `${entry.name}.xml`);
            const deleteButton = this.doc.createElement("button");
            deleteButton.textContent = "Delete";
            deleteButton.className = "action-delete";
            deleteButton.type = "button";
            deleteButton.addEventListener("click", () => void this.deleteDocument(entry.id));
            actionCell.append(xmlLink, " ", deleteButton);
            row.append(nameCell, countCell, dateCell, actionCell);
            this.docTableBody.append(row);
        }
    }
    async deleteDocument(id) {
        try {
            await this.client.remove(id);
            await this.refreshDocuments();
        }
        catch (err) {
            this.setStatus(this.documentsStatus, describeError(err), true);
        }
    }
    renderSelects() {
        for (const select of [this.selectA, this.selectB]) {
            const previous = select.value;
            select.innerHTML = "";
            for (const entry of this.documents) {
                const option = this.doc.createElement("option");
                option.value = String(entry.id);
                option.textContent = entry.name;
                select.append(option);
            }
            if (previous && this.documents.some((d) => String(d.id) === previous)) {
                select.value = previous;
            }
            else if (this.documents.length > 0) {
                select.value = String(this.documents[0].id);
            }
        }
        if (this.documents.length > 1 && this.selectA.value === this.selectB.value) {
            this.selectB.value = String(this.documents[1].id);
        }
    }
    renderComparison(report, pageHtml) {
        const names = new Map(this.documents.map((d) => [d.id, d.name]));
        this.summaryEl.innerHTML = "";
        const sides = [
            ["a", report.doc_a, report.pct_a, report.band_a],
            ["b", report.doc_b, report.pct_b, report.band_b],
        ];
        for (const [side, id, pct, band] of sides) {
            const row = this.doc.createElement("div");
            row.className = "summary-row";
            const nameEl = this.doc.createElement("span");
            nameEl.className = "summary-name";
            nameEl.textContent = names.get(id) ?? `document ${id}`;
            const pctEl = this.doc.createElement("span");
            pctEl.className = `pct pct-${side}`;
            pctEl.textContent = `${pct}%`;
            const badge = badgeFor(band);
            const badgeEl = this.doc.createElement("span");
            badgeEl.className = `badge ${badge.cssClass}`;
            badgeEl.textContent = badge.label;
            row.append(nameEl, pctEl, badgeEl);
            this.summaryEl.append(row);
        }
        // re-host the engine's highlighted sections; the class contract
        // (match / thirdparty / plain) is styled by our stylesheet
        const parsed = new DOMParser().parseFromString(pageHtml, "text/html");
        const sectionA = parsed.querySelector("#doc-a");
        const sectionB = parsed.querySelector("#doc-b");
        this.docsEl.innerHTML = (sectionA?.outerHTML ?? "") + (sectionB?.outerHTML ?? "");
        const provenance = parsed.querySelector("section.provenance");
        this.provenanceEl.innerHTML = provenance?.outerHTML ?? "";
        this.resultEl.hidden = false;
    }
    setStatus(el, message, isError) {
        el.hidden = false;
        el.textContent = message;
        el.classList.toggle("error", isError);
    }
}
export function initApp(doc, options = {}) {
    return new App(doc, options);
}
