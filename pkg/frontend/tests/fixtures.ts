/** The five corpus fixtures used by the end-to-end test.  Sentence
 * overlaps are arranged so the known pairs produce 0, 1-of-7, 3-of-6,
 * 7-of-9 and 9-of-9 matching sentences. */

const X1 = "Information systems support the daily operation of modern organizations.";
const X2 = "The study collects requirements through interviews and direct observation.";
const X3 = "Results show that response time improves after the redesign.";
const A1 = "Data is stored in a relational database for later retrieval.";
const Y1 = "User acceptance testing was performed with twelve participants.";

const P = [
  "This study examines scheduling algorithms for campus laboratories.",
  "Existing timetables are produced by hand and contain frequent conflicts.",
  "A constraint solver assigns rooms based on capacity and equipment.",
  "Lecturer availability is encoded as a set of hard restrictions.",
  "Soft preferences cover consecutive sessions and building distance.",
  "The solver finds a feasible timetable for the evaluated semester.",
  "Conflict counts drop to zero in every tested scenario.",
];

export const FIXTURES: Record<string, string> = {
  "30104599-abstraksi": [
    "This thesis describes the design of an inventory application for a small retailer.",
    A1,
    "Stock levels are updated automatically after every transaction.",
    X1,
    X2,
    X3,
  ].join(" "),

  "30104876-abstraksi": [
    Y1,
    A1,
    "The sales module generates monthly summaries for management.",
    "Reports can be exported for further analysis.",
    "Future work includes integration with the purchasing workflow.",
  ].join(" "),

  "31104453-abstraksi": [
    X1,
    X2,
    X3,
    "A web interface lets staff enter orders from any terminal.",
    "Order histories are archived at the end of each period.",
    "The prototype was evaluated during a two week trial.",
    Y1,
  ].join(" "),

  "50404783-abstraksi": [
    ...P,
    "Administrators reviewed the generated schedules favourably.",
    "The approach generalizes to other faculties with minor changes.",
  ].join(" "),

  "50404087-abstraksi": [
    ...P,
    "A mobile client is planned as a follow up project.",
    "Deployment requires only a standard web server.",
  ].join(" "),
};
