// Menu: switches between the loader, evaluator and experiment views.
// Views stay mounted while hidden, so the active S-box and any running
// experiment survive switches.

export type ViewName = 'loader' | 'evaluator' | 'experiment';

export class MenuView {
  private readonly sections: Record<ViewName, HTMLElement>;

  constructor(
    root: HTMLElement,
    sections: Record<ViewName, HTMLElement>,
  ) {
    this.sections = sections;
    root.innerHTML = '<nav class="menu"></nav>';
    const nav = root.querySelector('.menu') as HTMLElement;
    for (const name of ['loader', 'evaluator', 'experiment'] as ViewName[]) {
      const button = document.createElement('button');
      button.textContent = name;
      button.dataset.view = name;
      button.addEventListener('click', () => this.show(name));
      nav.appendChild(button);
    }
    this.show('loader');
  }

  show(name: ViewName): void {
    for (const [key, section] of Object.entries(this.sections)) {
      section.hidden = key !== name;
    }
  }

  visibleView(): ViewName | null {
    for (const [key, section] of Object.entries(this.sections)) {
      if (!section.hidden) {
        return key as ViewName;
      }
    }
    return null;
  }
}
